//
// smigen - Copyright 2026 The smigen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "smigen/chem/kekulize.h"

#include <algorithm>
#include <exception>
#include <queue>
#include <string>
#include <vector>

#include "smigen/chem/element.h"
#include "smigen/chem/smiles_parser.h"

namespace smigen::chem {
namespace {

// Edmonds' blossom algorithm for maximum matching in a general graph.
class BlossomMatcher {
public:
  explicit BlossomMatcher(const std::vector<std::vector<int>> &graph)
      : g_(graph), n_(static_cast<int>(graph.size())), match_(n_, -1),
        parent_(n_), base_(n_), used_(n_), blossom_(n_) { }

  int run() {
    // Greedy start keeps the augmenting phase short.
    for (int v = 0; v < n_; ++v) {
      if (match_[v] >= 0) continue;
      for (int u : g_[v]) {
        if (match_[u] < 0) {
          match_[u] = v;
          match_[v] = u;
          break;
        }
      }
    }
    for (int v = 0; v < n_; ++v) {
      if (match_[v] >= 0) continue;
      int end = find_path(v);
      while (end >= 0) {
        const int pv = parent_[end];
        const int ppv = match_[pv];
        match_[end] = pv;
        match_[pv] = end;
        end = ppv;
      }
    }
    int matched = 0;
    for (int v = 0; v < n_; ++v)
      if (match_[v] >= 0) ++matched;
    return matched / 2;
  }

  int mate(int v) const { return match_[v]; }

private:
  int lca(int a, int b) {
    std::vector<bool> seen(n_, false);
    for (;;) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] < 0) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_path(int root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (int i = 0; i < n_; ++i) base_[i] = i;

    used_[root] = true;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int to : g_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] >= 0 && parent_[match_[to]] >= 0)) {
          const int cur = lca(v, to);
          std::fill(blossom_.begin(), blossom_.end(), false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (!blossom_[base_[i]]) continue;
            base_[i] = cur;
            if (!used_[i]) {
              used_[i] = true;
              q.push(i);
            }
          }
        } else if (parent_[to] < 0) {
          parent_[to] = v;
          if (match_[to] < 0) return to;
          used_[match_[to]] = true;
          q.push(match_[to]);
        }
      }
    }
    return -1;
  }

  const std::vector<std::vector<int>> &g_;
  int n_;
  std::vector<int> match_, parent_, base_;
  std::vector<bool> used_, blossom_;
};

int base_valence(const MolGraph &mol, int atom) {
  int sum = 0;
  for (const Neighbor &nb : mol.neighbors(atom))
    sum += base_order(mol.bond(nb.bond).order);
  return sum;
}

bool contains(std::span<const int> values, int v) {
  return std::find(values.begin(), values.end(), v) != values.end();
}

}  // namespace

bool needs_double_bond(const MolGraph &mol, int atom) {
  const Atom &a = mol.atom(atom);
  if (!a.aromatic) return false;
  const auto allowed = allowed_valences(a.element, a.formal_charge);
  if (allowed.empty()) return false;

  const int sum = base_valence(mol, atom) + a.explicit_h.value_or(0);
  if (a.bracket()) return !contains(allowed, sum) && contains(allowed, sum + 1);
  const int target = target_valence(a.element, a.formal_charge, sum);
  return target >= 0 && target - sum >= 1;
}

MolGraph kekulize(MolGraph mol) {
  const int n = mol.num_atoms();

  for (int i = 0; i < n; ++i) {
    if (mol.atom(i).aromatic && !mol.atom_in_ring(i))
      throw KekulizationError(KekulizationErrorKind::kAromaticAtomOutsideRing, i,
                              "aromatic atom outside a ring");
  }
  for (int b = 0; b < mol.num_bonds(); ++b) {
    const Bond &bond = mol.bond(b);
    if (bond.order != BondOrder::kAromatic) continue;
    if (!mol.atom(bond.begin).aromatic || !mol.atom(bond.end).aromatic
        || !mol.bond_in_ring(b))
      throw KekulizationError(KekulizationErrorKind::kInvalidAromaticBond,
                              bond.begin, "aromatic bond outside an aromatic ring");
  }

  std::vector<int> local(n, -1);
  std::vector<int> needy;
  for (int i = 0; i < n; ++i) {
    if (needs_double_bond(mol, i)) {
      local[i] = static_cast<int>(needy.size());
      needy.push_back(i);
    }
  }

  std::vector<std::vector<int>> graph(needy.size());
  for (int b = 0; b < mol.num_bonds(); ++b) {
    const Bond &bond = mol.bond(b);
    if (bond.order != BondOrder::kAromatic) continue;
    const int u = local[bond.begin], v = local[bond.end];
    if (u < 0 || v < 0) continue;
    graph[u].push_back(v);
    graph[v].push_back(u);
  }

  BlossomMatcher matcher(graph);
  const int matched = matcher.run();
  if (2 * matched != static_cast<int>(needy.size())) {
    int unmatched = -1;
    for (std::size_t i = 0; i < needy.size(); ++i)
      if (matcher.mate(static_cast<int>(i)) < 0) unmatched = needy[i];
    throw KekulizationError(KekulizationErrorKind::kNoAssignment, unmatched,
                            "no kekulé assignment for aromatic system");
  }

  for (int b = 0; b < mol.num_bonds(); ++b) {
    Bond &bond = mol.bond(b);
    if (bond.order != BondOrder::kAromatic) {
      bond.kekule_order = static_cast<int>(bond.order);
      continue;
    }
    const int u = local[bond.begin], v = local[bond.end];
    bond.kekule_order = (u >= 0 && v >= 0 && matcher.mate(u) == v) ? 2 : 1;
  }

  for (int i = 0; i < n; ++i) {
    Atom &a = mol.atom(i);
    if (a.bracket()) continue;
    int sum = 0;
    for (const Neighbor &nb : mol.neighbors(i)) sum += mol.bond(nb.bond).kekule_order;
    const int target = target_valence(a.element, a.formal_charge, sum);
    a.implicit_h = target >= 0 ? target - sum : 0;
  }

  mol.set_kekulized(true);
  return mol;
}

bool valence_ok(const MolGraph &mol) {
  for (int i = 0; i < mol.num_atoms(); ++i) {
    const Atom &a = mol.atom(i);
    if (!in_organic_subset(a.element)) return false;
    int sum = a.total_h();
    for (const Neighbor &nb : mol.neighbors(i)) sum += mol.bond(nb.bond).kekule_order;
    if (!contains(allowed_valences(a.element, a.formal_charge), sum)) return false;
  }
  return true;
}

MolGraph parse_valid(std::string_view smiles) {
  MolGraph mol = kekulize(parse(smiles));
  if (!valence_ok(mol)) throw ValenceError("valence not allowed");
  return mol;
}

bool validate(std::string_view smiles) {
  try {
    parse_valid(smiles);
    return true;
  } catch (const std::exception &) {
    return false;
  }
}

}  // namespace smigen::chem
