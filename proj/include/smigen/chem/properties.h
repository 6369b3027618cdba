//
// smigen - Copyright 2026 The smigen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SMIGEN_CHEM_PROPERTIES_H_
#define SMIGEN_CHEM_PROPERTIES_H_

#include <string_view>

#include "smigen/chem/molecule.h"

namespace smigen::chem {

struct PropertyVector {
  int smiles_length = 0;
  int hac = 0;
  double mw = 0.0;
  int rotatable_bonds = 0;
  double frac_cyclic = 0.0;
  double frac_conjugated = 0.0;
  double frac_aromatic = 0.0;
  double frac_c = 0.0;
  double frac_n = 0.0;
  double frac_o = 0.0;
};

/// Descriptor set of a kekulized molecule. `rendered` is the string whose
/// character count is reported as smiles_length (callers pass the
/// substituted L/R/A form).
///
/// Rotatable bonds: acyclic single bonds between atoms that both have at
/// least two heavy neighbours. Conjugated atoms: atoms on an aromatic or
/// multiple bond, or on a single bond joining two such atoms.
PropertyVector properties(const MolGraph &mol, std::string_view rendered);

}  // namespace smigen::chem

#endif  // SMIGEN_CHEM_PROPERTIES_H_
