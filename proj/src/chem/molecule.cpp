//
// smigen - Copyright 2026 The smigen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "smigen/chem/molecule.h"

#include <algorithm>
#include <stack>
#include <vector>

#include "smigen/chem/element.h"

namespace smigen::chem {

int base_order(BondOrder order) {
  return order == BondOrder::kAromatic ? 1 : static_cast<int>(order);
}

int MolGraph::add_atom(Atom atom) {
  atom.index = num_atoms();
  atoms_.push_back(atom);
  adjacency_.emplace_back();
  atom_ring_.push_back(false);
  return atom.index;
}

int MolGraph::add_bond(int begin, int end, BondOrder order, bool implicit) {
  if (begin < 0 || end < 0 || begin >= num_atoms() || end >= num_atoms())
    throw GraphError("bond endpoint out of range");
  if (begin == end) throw GraphError("bond joins an atom to itself");
  if (find_bond(begin, end) >= 0) throw GraphError("duplicate bond");

  const int idx = num_bonds();
  bonds_.push_back(Bond {begin, end, order, 0, implicit});
  adjacency_[begin].push_back({end, idx});
  adjacency_[end].push_back({begin, idx});
  bond_ring_.push_back(false);
  return idx;
}

int MolGraph::find_bond(int a, int b) const {
  for (const Neighbor &nb : adjacency_[a])
    if (nb.atom == b) return nb.bond;
  return -1;
}

int MolGraph::heavy_degree(int atom) const {
  return static_cast<int>(std::count_if(
      adjacency_[atom].begin(), adjacency_[atom].end(),
      [&](const Neighbor &nb) { return atoms_[nb.atom].element != kHydrogen; }));
}

int MolGraph::heavy_atom_count() const {
  return static_cast<int>(std::count_if(
      atoms_.begin(), atoms_.end(),
      [](const Atom &a) { return a.element != kHydrogen; }));
}

void MolGraph::perceive_rings() {
  const int n = num_atoms();
  std::fill(atom_ring_.begin(), atom_ring_.end(), false);
  std::fill(bond_ring_.begin(), bond_ring_.end(), true);

  // Iterative Tarjan bridge finding.
  std::vector<int> disc(n, -1), low(n, 0);
  struct Frame {
    int atom;
    int parent_bond;
    std::size_t next;
  };
  int timer = 0;
  for (int root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    std::stack<Frame> stack;
    stack.push({root, -1, 0});
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame &f = stack.top();
      if (f.next < adjacency_[f.atom].size()) {
        const Neighbor nb = adjacency_[f.atom][f.next++];
        if (nb.bond == f.parent_bond) continue;
        if (disc[nb.atom] < 0) {
          disc[nb.atom] = low[nb.atom] = timer++;
          stack.push({nb.atom, nb.bond, 0});
        } else {
          low[f.atom] = std::min(low[f.atom], disc[nb.atom]);
        }
        continue;
      }
      const Frame done = f;
      stack.pop();
      if (done.parent_bond >= 0) {
        const int parent = bonds_[done.parent_bond].other(done.atom);
        low[parent] = std::min(low[parent], low[done.atom]);
        if (low[done.atom] > disc[parent]) bond_ring_[done.parent_bond] = false;
      }
    }
  }

  for (int b = 0; b < num_bonds(); ++b) {
    if (!bond_ring_[b]) continue;
    atom_ring_[bonds_[b].begin] = true;
    atom_ring_[bonds_[b].end] = true;
  }
}

bool MolGraph::connected() const {
  if (atoms_.empty()) return true;
  std::vector<bool> seen(atoms_.size(), false);
  std::vector<int> todo {0};
  seen[0] = true;
  int count = 1;
  while (!todo.empty()) {
    const int a = todo.back();
    todo.pop_back();
    for (const Neighbor &nb : adjacency_[a]) {
      if (seen[nb.atom]) continue;
      seen[nb.atom] = true;
      ++count;
      todo.push_back(nb.atom);
    }
  }
  return count == num_atoms();
}

}  // namespace smigen::chem
