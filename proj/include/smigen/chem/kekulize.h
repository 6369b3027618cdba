//
// smigen - Copyright 2026 The smigen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SMIGEN_CHEM_KEKULIZE_H_
#define SMIGEN_CHEM_KEKULIZE_H_

#include <stdexcept>
#include <string>
#include <string_view>

#include "smigen/chem/molecule.h"

namespace smigen::chem {

enum class KekulizationErrorKind {
  kNoAssignment,
  kAromaticAtomOutsideRing,
  // Aromatic bond touching a non-aromatic atom or lying outside a ring.
  kInvalidAromaticBond,
};

class KekulizationError : public std::runtime_error {
public:
  KekulizationError(KekulizationErrorKind kind, int atom, const std::string &msg)
      : std::runtime_error(msg), kind_(kind), atom_(atom) { }

  KekulizationErrorKind kind() const { return kind_; }
  int atom() const { return atom_; }

private:
  KekulizationErrorKind kind_;
  int atom_;
};

/// True when an aromatic atom must receive exactly one double bond from its
/// aromatic bonds. Computed from the valence with aromatic bonds counted as
/// single: bare atoms are needy when the next allowed valence is not yet
/// reached; bracket atoms when their current valence is not allowed but one
/// more bond would be.
bool needs_double_bond(const MolGraph &mol, int atom);

/// Assigns single/double orders to aromatic bonds by a perfect matching on
/// the subgraph of needy aromatic atoms, then fills implicit hydrogens for
/// bare atoms. Non-aromatic bonds keep their order. Aromatic flags are kept.
///
/// Throws KekulizationError.
MolGraph kekulize(MolGraph mol);

/// Every atom's total valence (kekulé bond orders + hydrogens) is allowed
/// for its element and charge. Requires a kekulized graph.
bool valence_ok(const MolGraph &mol);

/// parse + kekulize + valence check. Never throws.
bool validate(std::string_view smiles);

/// Parses, kekulizes and checks valences; throws ParseError,
/// KekulizationError or ValenceError.
MolGraph parse_valid(std::string_view smiles);

class ValenceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace smigen::chem

#endif  // SMIGEN_CHEM_KEKULIZE_H_
