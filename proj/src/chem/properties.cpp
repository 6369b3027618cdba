//
// smigen - Copyright 2026 The smigen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "smigen/chem/properties.h"

#include <vector>

#include "smigen/chem/element.h"

namespace smigen::chem {

PropertyVector properties(const MolGraph &mol, std::string_view rendered) {
  PropertyVector p;
  p.smiles_length = static_cast<int>(rendered.size());

  const int n = mol.num_atoms();
  const double h_weight = atomic_weight(1);
  std::vector<bool> multiple(n, false);
  int heavy = 0, cyclic = 0, aromatic = 0, c = 0, nn = 0, o = 0;
  for (int i = 0; i < n; ++i) {
    const Atom &a = mol.atom(i);
    p.mw += atomic_weight(a.element) + h_weight * a.total_h();
    if (a.element == 1) continue;
    ++heavy;
    if (mol.atom_in_ring(i)) ++cyclic;
    if (a.aromatic) ++aromatic;
    if (a.element == kCarbon) ++c;
    if (a.element == kNitrogen) ++nn;
    if (a.element == kOxygen) ++o;
  }

  // Endpoints of a single bond between two multiply-bonded atoms are
  // already covered by their own multiple bonds.
  for (const Bond &b : mol.bonds()) {
    if (b.order != BondOrder::kSingle) multiple[b.begin] = multiple[b.end] = true;
  }
  for (int i = 0; i < mol.num_bonds(); ++i) {
    const Bond &b = mol.bond(i);
    if (b.order != BondOrder::kSingle) continue;
    if (!mol.bond_in_ring(i) && mol.heavy_degree(b.begin) >= 2
        && mol.heavy_degree(b.end) >= 2)
      ++p.rotatable_bonds;
  }

  int conj = 0;
  for (int i = 0; i < n; ++i)
    if (multiple[i] && mol.atom(i).element != 1) ++conj;

  p.hac = heavy;
  if (heavy > 0) {
    const double h = heavy;
    p.frac_cyclic = cyclic / h;
    p.frac_conjugated = conj / h;
    p.frac_aromatic = aromatic / h;
    p.frac_c = c / h;
    p.frac_n = nn / h;
    p.frac_o = o / h;
  }
  return p;
}

}  // namespace smigen::chem
