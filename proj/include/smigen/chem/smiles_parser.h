//
// smigen - Copyright 2026 The smigen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SMIGEN_CHEM_SMILES_PARSER_H_
#define SMIGEN_CHEM_SMILES_PARSER_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "smigen/chem/molecule.h"

namespace smigen::chem {

enum class ParseErrorKind {
  kEmptyInput,
  kUnknownToken,
  kUnbalancedBranch,
  kUnclosedRing,
  // Ring closure onto the same atom or onto an existing bond, or
  // conflicting bond symbols on the two ends.
  kInvalidRingBond,
  // Bond or branch symbol with nothing to attach to.
  kSyntax,
};

std::string_view to_string(ParseErrorKind kind);

class ParseError : public std::runtime_error {
public:
  ParseError(ParseErrorKind kind, std::size_t position, const std::string &msg);

  ParseErrorKind kind() const { return kind_; }
  std::size_t position() const { return position_; }

private:
  ParseErrorKind kind_;
  std::size_t position_;
};

/// Parses a single-component SMILES into a graph whose atom order is the
/// writing order. Both raw and substituted forms are accepted: L, R and A
/// read as Cl, Br and [nH]. Stereo marks (/, \, @) are accepted and
/// dropped. Ring membership is perceived before returning.
///
/// Throws ParseError.
MolGraph parse(std::string_view smiles);

}  // namespace smigen::chem

#endif  // SMIGEN_CHEM_SMILES_PARSER_H_
