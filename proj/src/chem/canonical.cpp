//
// smigen - Copyright 2026 The smigen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "smigen/chem/canonical.h"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "smigen/chem/element.h"

namespace smigen::chem {
namespace {

int bond_code(BondOrder order) { return static_cast<int>(order); }

bool has_aromatic_double(const MolGraph &mol, int atom) {
  for (const Neighbor &nb : mol.neighbors(atom)) {
    const Bond &b = mol.bond(nb.bond);
    if (b.order == BondOrder::kAromatic && b.kekule_order == 2) return true;
  }
  return false;
}

bool writes_bare(const MolGraph &mol, int i) {
  const Atom &a = mol.atom(i);
  if (a.formal_charge != 0 || !is_bare_element(a.element)) return false;
  if (a.aromatic && !can_be_aromatic(a.element)) return false;

  int base = 0, kek = 0;
  for (const Neighbor &nb : mol.neighbors(i)) {
    const Bond &b = mol.bond(nb.bond);
    base += base_order(b.order);
    kek += b.kekule_order;
  }
  if (a.aromatic) {
    const int target = target_valence(a.element, 0, base);
    const bool needy = target >= 0 && target - base >= 1;
    if (needy != has_aromatic_double(mol, i)) return false;
  }
  const int target = target_valence(a.element, 0, kek);
  return target >= 0 && target - kek == a.total_h();
}

void append_atom(std::string &out, const MolGraph &mol, int i) {
  const Atom &a = mol.atom(i);
  std::string symbol(element_symbol(a.element));
  if (a.aromatic)
    std::transform(symbol.begin(), symbol.end(), symbol.begin(),
                   [](unsigned char c) { return std::tolower(c); });
  if (writes_bare(mol, i)) {
    out += symbol;
    return;
  }
  out += '[';
  out += symbol;
  const int h = a.total_h();
  if (h > 0) {
    out += 'H';
    if (h > 1) out += std::to_string(h);
  }
  if (a.formal_charge != 0) {
    out += a.formal_charge > 0 ? '+' : '-';
    const int mag = std::abs(a.formal_charge);
    if (mag > 1) out += std::to_string(mag);
  }
  out += ']';
}

void append_bond(std::string &out, const MolGraph &mol, int b) {
  const Bond &bond = mol.bond(b);
  switch (bond.order) {
  case BondOrder::kSingle:
    if (mol.atom(bond.begin).aromatic && mol.atom(bond.end).aromatic) out += '-';
    break;
  case BondOrder::kDouble: out += '='; break;
  case BondOrder::kTriple: out += '#'; break;
  case BondOrder::kAromatic: break;
  }
}

void append_ring_digit(std::string &out, int digit) {
  if (digit < 10) {
    out += static_cast<char>('0' + digit);
  } else {
    out += '%';
    out += std::to_string(digit);
  }
}

class Writer {
public:
  Writer(const MolGraph &mol, std::span<const int> priority)
      : mol_(mol), priority_(priority), n_(mol.num_atoms()), state_(n_, 0),
        order_(n_, -1), children_(n_), closures_(n_),
        bond_used_(mol.num_bonds(), false), digit_of_(mol.num_bonds(), -1) { }

  std::string run() {
    if (n_ == 0) return {};
    if (!mol_.kekulized())
      throw std::invalid_argument("write_smiles requires a kekulized graph");
    const int start = static_cast<int>(
        std::min_element(priority_.begin(), priority_.end()) - priority_.begin());
    traverse(start, -1);
    if (visited_ != n_)
      throw std::invalid_argument("write_smiles requires a connected graph");

    for (auto &list : closures_) {
      // Closers in discovery order first, then openers by partner order.
      std::stable_partition(list.begin(), list.end(),
                            [](const Closure &c) { return !c.opener; });
      auto first_opener = std::find_if(list.begin(), list.end(),
                                       [](const Closure &c) { return c.opener; });
      std::stable_sort(first_opener, list.end(),
                       [&](const Closure &x, const Closure &y) {
                         return order_[x.partner] < order_[y.partner];
                       });
    }

    std::string out;
    out.reserve(static_cast<std::size_t>(n_) * 2);
    emit(out, start);
    return out;
  }

private:
  struct Closure {
    int bond;
    int partner;
    bool opener;
  };

  void traverse(int u, int parent_bond) {
    state_[u] = 1;
    order_[u] = visited_++;
    std::vector<Neighbor> nbs(mol_.neighbors(u).begin(), mol_.neighbors(u).end());
    std::sort(nbs.begin(), nbs.end(), [&](const Neighbor &x, const Neighbor &y) {
      return priority_[x.atom] < priority_[y.atom];
    });
    for (const Neighbor &nb : nbs) {
      if (nb.bond == parent_bond) continue;
      if (state_[nb.atom] == 0) {
        children_[u].push_back(nb);
        traverse(nb.atom, nb.bond);
      } else if (state_[nb.atom] == 1 && !bond_used_[nb.bond]) {
        bond_used_[nb.bond] = true;
        closures_[nb.atom].push_back({nb.bond, u, true});
        closures_[u].push_back({nb.bond, nb.atom, false});
      }
    }
    state_[u] = 2;
  }

  void emit(std::string &out, int u) {
    append_atom(out, mol_, u);
    for (const Closure &c : closures_[u]) {
      if (c.opener) {
        int d = 1;
        while (std::find(open_digits_.begin(), open_digits_.end(), d)
               != open_digits_.end())
          ++d;
        open_digits_.push_back(d);
        digit_of_[c.bond] = d;
        append_bond(out, mol_, c.bond);
        append_ring_digit(out, d);
      } else {
        const int d = digit_of_[c.bond];
        append_ring_digit(out, d);
        open_digits_.erase(std::find(open_digits_.begin(), open_digits_.end(), d));
      }
    }
    const auto &kids = children_[u];
    for (std::size_t k = 0; k < kids.size(); ++k) {
      const bool last = k + 1 == kids.size();
      if (!last) out += '(';
      append_bond(out, mol_, kids[k].bond);
      emit(out, kids[k].atom);
      if (!last) out += ')';
    }
  }

  const MolGraph &mol_;
  std::span<const int> priority_;
  int n_;
  int visited_ = 0;
  std::vector<int> state_;
  std::vector<int> order_;
  std::vector<std::vector<Neighbor>> children_;
  std::vector<std::vector<Closure>> closures_;
  std::vector<bool> bond_used_;
  std::vector<int> digit_of_;
  std::vector<int> open_digits_;
};

// Relabels keys to dense class values in key order.
template <class Key>
int densify(const std::vector<Key> &keys, std::vector<int> &classes) {
  const int n = static_cast<int>(keys.size());
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](int a, int b) { return keys[a] < keys[b]; });
  int cls = -1;
  for (int k = 0; k < n; ++k) {
    if (k == 0 || keys[idx[k]] != keys[idx[k - 1]]) ++cls;
    classes[idx[k]] = cls;
  }
  return cls + 1;
}

int count_classes(const std::vector<int> &classes) {
  if (classes.empty()) return 0;
  return *std::max_element(classes.begin(), classes.end()) + 1;
}

void refine(const MolGraph &mol, std::vector<int> &classes) {
  const int n = mol.num_atoms();
  int count = count_classes(classes);
  std::vector<std::vector<int>> keys(n);
  for (;;) {
    for (int i = 0; i < n; ++i) {
      auto &key = keys[i];
      key.clear();
      key.push_back(classes[i]);
      const std::size_t head = key.size();
      for (const Neighbor &nb : mol.neighbors(i))
        key.push_back(classes[nb.atom] * 8 + bond_code(mol.bond(nb.bond).order));
      std::sort(key.begin() + static_cast<std::ptrdiff_t>(head), key.end());
    }
    const int next = densify(keys, classes);
    if (next == count) return;
    count = next;
  }
}

class CanonicalSearch {
public:
  CanonicalSearch(const MolGraph &mol, int budget) : mol_(mol), budget_(budget) { }

  std::string run(std::vector<int> classes) {
    search(std::move(classes));
    return best_;
  }

private:
  void search(std::vector<int> classes) {
    const int n = mol_.num_atoms();
    if (count_classes(classes) == n) {
      std::string s = write_smiles(mol_, classes);
      if (leaves_ == 0 || s < best_) best_ = std::move(s);
      ++leaves_;
      return;
    }

    // First (lowest) class with more than one member.
    std::vector<int> sizes(n, 0);
    for (int c : classes) ++sizes[c];
    const int tied = static_cast<int>(
        std::find_if(sizes.begin(), sizes.end(), [](int s) { return s > 1; })
        - sizes.begin());

    for (int m = 0; m < n; ++m) {
      if (classes[m] != tied) continue;
      std::vector<int> split(n);
      for (int i = 0; i < n; ++i)
        split[i] = classes[i] * 2 + (classes[i] == tied && i != m ? 1 : 0);
      std::vector<int> dense(n);
      densify(split, dense);
      refine(mol_, dense);
      search(std::move(dense));
      if (leaves_ >= budget_) return;
    }
  }

  const MolGraph &mol_;
  int budget_;
  int leaves_ = 0;
  std::string best_;
};

}  // namespace

std::string write_smiles(const MolGraph &mol, std::span<const int> priority) {
  if (static_cast<int>(priority.size()) != mol.num_atoms())
    throw std::invalid_argument("priority size mismatch");
  return Writer(mol, priority).run();
}

std::vector<int> refined_classes(const MolGraph &mol) {
  const int n = mol.num_atoms();
  std::vector<std::vector<int>> keys(n);
  for (int i = 0; i < n; ++i) {
    const Atom &a = mol.atom(i);
    keys[i] = {a.element,
               a.aromatic ? 1 : 0,
               static_cast<int>(mol.neighbors(i).size()),
               a.total_h(),
               a.formal_charge,
               mol.atom_in_ring(i) ? 1 : 0};
  }
  std::vector<int> classes(n);
  densify(keys, classes);
  refine(mol, classes);
  return classes;
}

std::string canonical_key(const MolGraph &mol, int leaf_budget) {
  if (mol.num_atoms() == 0) return {};
  return CanonicalSearch(mol, std::max(1, leaf_budget)).run(refined_classes(mol));
}

std::string randomize(const MolGraph &mol, Rng &rng) {
  std::vector<int> priority(mol.num_atoms());
  std::iota(priority.begin(), priority.end(), 0);
  rng.shuffle(std::span<int>(priority));
  return write_smiles(mol, priority);
}

}  // namespace smigen::chem
