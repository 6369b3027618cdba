//
// smigen - Copyright 2026 The smigen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SMIGEN_CHEM_ELEMENT_H_
#define SMIGEN_CHEM_ELEMENT_H_

#include <span>
#include <string_view>

namespace smigen::chem {

inline constexpr int kHydrogen = 1;
inline constexpr int kBoron = 5;
inline constexpr int kCarbon = 6;
inline constexpr int kNitrogen = 7;
inline constexpr int kOxygen = 8;
inline constexpr int kFluorine = 9;
inline constexpr int kPhosphorus = 15;
inline constexpr int kSulfur = 16;
inline constexpr int kChlorine = 17;
inline constexpr int kBromine = 35;
inline constexpr int kIodine = 53;

/// Atomic number for a (case-sensitive) element symbol, or 0 if unknown.
int atomic_number(std::string_view symbol);

/// Element symbol for an atomic number in [1, 118]; empty otherwise.
std::string_view element_symbol(int atomic_number);

/// Standard atomic weight in Da. Defined for the organic subset plus P;
/// returns 0 for other elements.
double atomic_weight(int atomic_number);

/// H, B, C, N, O, F, S, Cl, Br, I.
bool in_organic_subset(int atomic_number);

/// Elements that may be written outside brackets.
bool is_bare_element(int atomic_number);

/// Elements that may carry the aromatic flag.
bool can_be_aromatic(int atomic_number);

/// Allowed total valences (bond orders + hydrogens) in ascending order.
/// Empty when the element/charge combination is not supported.
std::span<const int> allowed_valences(int atomic_number, int formal_charge);

/// Smallest allowed valence >= `used`, or -1 if none.
int target_valence(int atomic_number, int formal_charge, int used);

}  // namespace smigen::chem

#endif  // SMIGEN_CHEM_ELEMENT_H_
