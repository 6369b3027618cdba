//
// smigen - Copyright 2026 The smigen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SMIGEN_CORPUS_CORPUS_H_
#define SMIGEN_CORPUS_CORPUS_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "smigen/chem/molecule.h"

namespace smigen::corpus {

class CorpusError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct CorpusConfig {
  int augmentation_attempts = 1;
  bool use_canonical_only = true;
  // Heavy-atom cap for the fragment-size filter; <= 0 disables it.
  int max_heavy_atoms = 24;
  // Upper bound for the training window; the window itself is derived
  // from the corpus length distribution.
  int max_sequence_length = 200;
  std::uint64_t seed = 0;

  void validate() const;
};

struct Standardized {
  std::vector<std::string> components;
  int dropped = 0;
};

/// Splits on '.', removes stereo marks and canonicalizes each component.
/// Components that fail validation are counted in `dropped`.
Standardized standardize(std::string_view raw_smiles);

/// At least one carbon and nothing outside H, B, C, N, O, F, S, Cl, Br, I.
bool filter_organic(const chem::MolGraph &mol);

/// Cl -> L, Br -> R, [nH] -> A.
std::string substitute_chars(std::string_view smiles);
std::string restore_chars(std::string_view smiles);

struct Augmented {
  std::vector<std::string> smiles;  // sorted, unique
  double realized_factor = 0.0;
};

/// `attempts` random writings per molecule, pooled and deduplicated.
/// Molecule i draws from its own stream derived from (seed, i).
Augmented augment(const std::vector<chem::MolGraph> &molecules, int attempts,
                  std::uint64_t seed);

/// Reads one SMILES per line; text after a tab is an identifier and lines
/// starting with '#' are skipped.
std::vector<std::string> read_smiles_lines(const std::string &path);

}  // namespace smigen::corpus

#endif  // SMIGEN_CORPUS_CORPUS_H_
