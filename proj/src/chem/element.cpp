//
// smigen - Copyright 2026 The smigen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "smigen/chem/element.h"

#include <array>
#include <span>
#include <string_view>

namespace smigen::chem {
namespace {

constexpr std::array<std::string_view, 119> kSymbols = {
    "",   "H",  "He", "Li", "Be", "B",  "C",  "N",  "O",  "F",  "Ne", "Na",
    "Mg", "Al", "Si", "P",  "S",  "Cl", "Ar", "K",  "Ca", "Sc", "Ti", "V",
    "Cr", "Mn", "Fe", "Co", "Ni", "Cu", "Zn", "Ga", "Ge", "As", "Se", "Br",
    "Kr", "Rb", "Sr", "Y",  "Zr", "Nb", "Mo", "Tc", "Ru", "Rh", "Pd", "Ag",
    "Cd", "In", "Sn", "Sb", "Te", "I",  "Xe", "Cs", "Ba", "La", "Ce", "Pr",
    "Nd", "Pm", "Sm", "Eu", "Gd", "Tb", "Dy", "Ho", "Er", "Tm", "Yb", "Lu",
    "Hf", "Ta", "W",  "Re", "Os", "Ir", "Pt", "Au", "Hg", "Tl", "Pb", "Bi",
    "Po", "At", "Rn", "Fr", "Ra", "Ac", "Th", "Pa", "U",  "Np", "Pu", "Am",
    "Cm", "Bk", "Cf", "Es", "Fm", "Md", "No", "Lr", "Rf", "Db", "Sg", "Bh",
    "Hs", "Mt", "Ds", "Rg", "Cn", "Nh", "Fl", "Mc", "Lv", "Ts", "Og",
};

struct ValenceRule {
  int atomic_number;
  int charge;
  std::array<int, 3> valences;
  int count;
};

// Neutral organic-subset rules plus the common charged states. Charged
// states beyond N+ and O- follow the isoelectronic neighbour.
constexpr std::array<ValenceRule, 20> kValenceRules = {{
    {kHydrogen, 0, {1}, 1},
    {kBoron, 0, {3}, 1},
    {kBoron, -1, {4}, 1},
    {kCarbon, 0, {4}, 1},
    {kCarbon, -1, {3}, 1},
    {kCarbon, 1, {3}, 1},
    {kNitrogen, 0, {3}, 1},
    {kNitrogen, 1, {4}, 1},
    {kNitrogen, -1, {2}, 1},
    {kOxygen, 0, {2}, 1},
    {kOxygen, -1, {1}, 1},
    {kOxygen, 1, {3}, 1},
    {kFluorine, 0, {1}, 1},
    {kPhosphorus, 0, {3, 5}, 2},
    {kSulfur, 0, {2, 4, 6}, 3},
    {kSulfur, 1, {3, 5}, 2},
    {kSulfur, -1, {1, 3, 5}, 3},
    {kChlorine, 0, {1}, 1},
    {kBromine, 0, {1}, 1},
    {kIodine, 0, {1}, 1},
}};

const ValenceRule *find_rule(int z, int charge) {
  for (const auto &r : kValenceRules)
    if (r.atomic_number == z && r.charge == charge) return &r;
  return nullptr;
}

}  // namespace

int atomic_number(std::string_view symbol) {
  for (int z = 1; z < static_cast<int>(kSymbols.size()); ++z)
    if (kSymbols[z] == symbol) return z;
  return 0;
}

std::string_view element_symbol(int z) {
  if (z < 1 || z >= static_cast<int>(kSymbols.size())) return {};
  return kSymbols[z];
}

double atomic_weight(int z) {
  switch (z) {
  case kHydrogen: return 1.008;
  case kBoron: return 10.81;
  case kCarbon: return 12.011;
  case kNitrogen: return 14.007;
  case kOxygen: return 15.999;
  case kFluorine: return 18.998;
  case kPhosphorus: return 30.974;
  case kSulfur: return 32.06;
  case kChlorine: return 35.45;
  case kBromine: return 79.904;
  case kIodine: return 126.904;
  default: return 0.0;
  }
}

bool in_organic_subset(int z) {
  switch (z) {
  case kHydrogen:
  case kBoron:
  case kCarbon:
  case kNitrogen:
  case kOxygen:
  case kFluorine:
  case kSulfur:
  case kChlorine:
  case kBromine:
  case kIodine:
    return true;
  default:
    return false;
  }
}

bool is_bare_element(int z) {
  return z != kHydrogen && (in_organic_subset(z) || z == kPhosphorus);
}

bool can_be_aromatic(int z) {
  return z == kBoron || z == kCarbon || z == kNitrogen || z == kOxygen
         || z == kPhosphorus || z == kSulfur;
}

std::span<const int> allowed_valences(int z, int charge) {
  const ValenceRule *rule = find_rule(z, charge);
  if (rule == nullptr) return {};
  return {rule->valences.data(), static_cast<std::size_t>(rule->count)};
}

int target_valence(int z, int charge, int used) {
  for (int v : allowed_valences(z, charge))
    if (v >= used) return v;
  return -1;
}

}  // namespace smigen::chem
