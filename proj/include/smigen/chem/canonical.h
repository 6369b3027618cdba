//
// smigen - Copyright 2026 The smigen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SMIGEN_CHEM_CANONICAL_H_
#define SMIGEN_CHEM_CANONICAL_H_

#include <span>
#include <string>
#include <vector>

#include "smigen/chem/molecule.h"
#include "smigen/util/random.h"

namespace smigen::chem {

/// Writes SMILES by depth-first traversal: starts at the atom with the
/// lowest priority and visits neighbours in ascending priority. Aromatic
/// atoms stay lowercase; hydrogens and charges go in brackets only when a
/// re-parse would not reproduce them. Requires a kekulized graph.
std::string write_smiles(const MolGraph &mol, std::span<const int> priority);

/// Iteratively refined atom classes (Morgan-style). Atoms in the same class
/// share a value; values are dense and ordered by invariant.
std::vector<int> refined_classes(const MolGraph &mol);

/// Canonical SMILES. Ties left after refinement are broken by trying each
/// candidate and keeping the lexicographically smallest string. The search
/// is capped at `leaf_budget` complete orderings.
std::string canonical_key(const MolGraph &mol, int leaf_budget = 4096);

/// SMILES of the same molecule from a uniformly random start atom and
/// random neighbour order.
std::string randomize(const MolGraph &mol, Rng &rng);

}  // namespace smigen::chem

#endif  // SMIGEN_CHEM_CANONICAL_H_
