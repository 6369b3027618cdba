//
// smigen - Copyright 2026 The smigen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SMIGEN_CHEM_MOLECULE_H_
#define SMIGEN_CHEM_MOLECULE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace smigen::chem {

enum class BondOrder : std::uint8_t {
  kSingle = 1,
  kDouble = 2,
  kTriple = 3,
  kAromatic = 4,
};

/// Integer contribution of a bond to valence before kekulization; aromatic
/// bonds count as single.
int base_order(BondOrder order);

struct Atom {
  int element = 0;  // atomic number
  bool aromatic = false;
  int formal_charge = 0;
  // Present only for atoms written in brackets.
  std::optional<int> explicit_h;
  // Filled during kekulization for bare atoms.
  int implicit_h = 0;
  int index = -1;

  bool bracket() const { return explicit_h.has_value(); }
  int total_h() const { return explicit_h.value_or(implicit_h); }
};

struct Bond {
  int begin = -1;
  int end = -1;
  BondOrder order = BondOrder::kSingle;
  // 1, 2 or 3 after kekulization; 0 before.
  int kekule_order = 0;
  // Order was not written in the SMILES (used for the non-ring aromatic
  // fixup after ring perception).
  bool implicit = false;

  int other(int atom) const { return atom == begin ? end : begin; }
};

struct Neighbor {
  int atom;
  int bond;
};

class GraphError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Molecular graph with atoms in SMILES writing order.
class MolGraph {
public:
  int add_atom(Atom atom);

  /// Throws GraphError for self loops, out-of-range or duplicate bonds.
  int add_bond(int begin, int end, BondOrder order, bool implicit = false);

  int num_atoms() const { return static_cast<int>(atoms_.size()); }
  int num_bonds() const { return static_cast<int>(bonds_.size()); }

  const Atom &atom(int i) const { return atoms_[i]; }
  Atom &atom(int i) { return atoms_[i]; }
  const Bond &bond(int i) const { return bonds_[i]; }
  Bond &bond(int i) { return bonds_[i]; }

  std::span<const Atom> atoms() const { return atoms_; }
  std::span<const Bond> bonds() const { return bonds_; }
  std::span<const Neighbor> neighbors(int atom) const {
    return adjacency_[atom];
  }

  /// Bond index joining a and b, or -1.
  int find_bond(int a, int b) const;

  /// Number of non-hydrogen neighbours.
  int heavy_degree(int atom) const;
  int heavy_atom_count() const;

  /// Recomputes ring membership (a bond is in a ring iff it is not a
  /// bridge).
  void perceive_rings();
  bool atom_in_ring(int atom) const { return atom_ring_[atom]; }
  bool bond_in_ring(int bond) const { return bond_ring_[bond]; }

  bool kekulized() const { return kekulized_; }
  void set_kekulized(bool value) { kekulized_ = value; }

  bool connected() const;

private:
  std::vector<Atom> atoms_;
  std::vector<Bond> bonds_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::vector<bool> atom_ring_;
  std::vector<bool> bond_ring_;
  bool kekulized_ = false;
};

}  // namespace smigen::chem

#endif  // SMIGEN_CHEM_MOLECULE_H_
