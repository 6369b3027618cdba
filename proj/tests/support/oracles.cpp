//
// smigen - Copyright 2026 The smigen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "oracles.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "smigen/chem/element.h"

namespace smigen::testing {
namespace {

double log_choose(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

// Smallest k with CDF(k) >= q, for a pmf over 0..n.
int quantile(const std::vector<double> &pmf, double q) {
  double cdf = 0.0;
  for (std::size_t k = 0; k < pmf.size(); ++k) {
    cdf += pmf[k];
    if (cdf >= q - 1e-12) return static_cast<int>(k);
  }
  return static_cast<int>(pmf.size()) - 1;
}

std::pair<double, double> interval(const std::vector<double> &pmf, int n, double alpha) {
  return {quantile(pmf, alpha / 2) / static_cast<double>(n),
          quantile(pmf, 1.0 - alpha / 2) / static_cast<double>(n)};
}

bool allowed(int z, int charge, int v) {
  for (int a : chem::allowed_valences(z, charge))
    if (a == v) return true;
  return false;
}

}  // namespace

std::pair<double, double> binomial_interval(double p, int n, double alpha) {
  std::vector<double> pmf(n + 1);
  for (int k = 0; k <= n; ++k)
    pmf[k] = std::exp(log_choose(n, k) + k * std::log(p) + (n - k) * std::log1p(-p));
  return interval(pmf, n, alpha);
}

std::pair<double, double> hypergeometric_interval(double p, int n, int pop, double alpha) {
  const int good = static_cast<int>(std::lround(p * pop));
  std::vector<double> pmf(n + 1, 0.0);
  for (int k = 0; k <= n; ++k) {
    if (k > good || n - k > pop - good) continue;
    pmf[k] = std::exp(log_choose(good, k) + log_choose(pop - good, n - k) - log_choose(pop, n));
  }
  return interval(pmf, n, alpha);
}

ExamOutcome simulate_examiner(const std::vector<double> &fractions, double lower,
                              int patience, int max_epochs) {
  const int last = std::min<int>(max_epochs, static_cast<int>(fractions.size()));
  for (int end = patience; end <= last; ++end) {
    bool all_in = true;
    for (int e = end - patience + 1; e <= end; ++e) all_in = all_in && fractions[e - 1] >= lower;
    if (all_in) return {end, end - patience + 1, false};
  }
  int best = 1;
  for (int e = 2; e <= last; ++e)
    if (fractions[e - 1] > fractions[best - 1]) best = e;
  return {last, best, true};
}

bool kekule_feasible_exhaustive(const chem::MolGraph &mol) {
  const int n = mol.num_atoms();
  std::vector<int> aromatic_bonds;
  std::vector<int> single_valence(n, 0);
  for (int b = 0; b < mol.num_bonds(); ++b) {
    const chem::Bond &bond = mol.bond(b);
    const int order = bond.order == chem::BondOrder::kAromatic ? 1
                                                                : static_cast<int>(bond.order);
    single_valence[bond.begin] += order;
    single_valence[bond.end] += order;
    if (bond.order == chem::BondOrder::kAromatic) aromatic_bonds.push_back(b);
  }
  for (int b : aromatic_bonds) {
    const chem::Bond &bond = mol.bond(b);
    if (!mol.atom(bond.begin).aromatic || !mol.atom(bond.end).aromatic) return false;
    if (!mol.bond_in_ring(b)) return false;
  }

  std::vector<int> need(n, 0);
  for (int i = 0; i < n; ++i) {
    const chem::Atom &a = mol.atom(i);
    if (!a.aromatic) continue;
    if (!mol.atom_in_ring(i)) return false;
    const int v = single_valence[i] + a.explicit_h.value_or(0);
    if (a.explicit_h) {
      need[i] = !allowed(a.element, a.formal_charge, v)
                && allowed(a.element, a.formal_charge, v + 1);
    } else {
      bool larger = false;
      for (int al : chem::allowed_valences(a.element, a.formal_charge)) larger = larger || al > v;
      need[i] = !allowed(a.element, a.formal_charge, v) && larger;
    }
  }

  const std::size_t k = aromatic_bonds.size();
  if (k > 24) return false;  // outside the oracle's range
  for (unsigned long mask = 0; mask < (1UL << k); ++mask) {
    std::vector<int> doubles(n, 0);
    for (std::size_t j = 0; j < k; ++j) {
      if (!(mask >> j & 1UL)) continue;
      const chem::Bond &bond = mol.bond(aromatic_bonds[j]);
      ++doubles[bond.begin];
      ++doubles[bond.end];
    }
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      if (mol.atom(i).aromatic) ok = doubles[i] == need[i];
    if (ok) return true;
  }
  return false;
}

std::vector<RecountPoint> recount_novelty(const std::vector<std::vector<eval::Scored>> &batches) {
  std::vector<RecountPoint> out;
  for (std::size_t t = 0; t < batches.size(); ++t) {
    std::set<std::string> before, all;
    long generated = 0;
    for (std::size_t u = 0; u <= t; ++u) {
      for (const auto &s : batches[u]) {
        ++generated;
        if (!s.valid) continue;
        all.insert(s.key);
        if (u < t) before.insert(s.key);
      }
    }
    RecountPoint p;
    std::set<std::string> fresh;
    for (const auto &s : batches[t]) {
      if (!s.valid) continue;
      ++p.valid;
      if (!before.count(s.key)) fresh.insert(s.key);
    }
    p.fresh = static_cast<long>(fresh.size());
    if (p.valid > 0) p.novelty_pct = 100.0 * p.fresh / p.valid;
    p.cumulative = static_cast<long>(all.size());
    p.efficiency_pct = generated > 0 ? 100.0 * p.cumulative / generated : 0.0;
    out.push_back(p);
  }
  return out;
}

double direct_tanimoto_pct(const std::vector<double> &a, const std::vector<double> &b) {
  double num = 0.0, den_a = 0.0, den_b = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num += a[i] * b[i];
    den_a += a[i] * a[i];
    den_b += b[i] * b[i];
  }
  return 100.0 * num / (den_a + den_b - num);
}

double direct_jsd(const std::vector<double> &p, const std::vector<double> &q) {
  // Sum of the two Kullback-Leibler terms against the midpoint.
  double d = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double m = 0.5 * (p[i] + q[i]);
    if (p[i] > 0) d += 0.5 * p[i] * std::log(p[i] / m);
    if (q[i] > 0) d += 0.5 * q[i] * std::log(q[i] / m);
  }
  return d;
}

}  // namespace smigen::testing
