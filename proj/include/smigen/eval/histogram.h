//
// smigen - Copyright 2026 The smigen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SMIGEN_EVAL_HISTOGRAM_H_
#define SMIGEN_EVAL_HISTOGRAM_H_

#include <span>
#include <utility>
#include <vector>

namespace smigen::eval {

/// Bins [edges[i], edges[i+1]).
struct Histogram {
  std::vector<double> edges;
  std::vector<double> counts;
  bool normalized = false;

  std::size_t bins() const { return counts.size(); }
};

/// Fixed-width bins aligned to multiples of `width`.
struct BinRule {
  double width = 1.0;

  static BinRule integer() { return {1.0}; }
  static BinRule molecular_weight() { return {10.0}; }
  static BinRule fraction() { return {0.02}; }
};

/// Throws EvalError on empty input.
Histogram histogram(std::span<const double> values, const BinRule &rule);

/// Both sets binned over the union of their ranges, sharing edges.
std::pair<Histogram, Histogram> joint_histograms(std::span<const double> a,
                                                 std::span<const double> b,
                                                 const BinRule &rule);

Histogram normalize(Histogram h);

/// Continuous Tanimoto sum(AB) / (sum(A^2) + sum(B^2) - sum(AB)), in
/// percent, on the counts as given. Throws EvalError when edges differ.
double tanimoto_match(const Histogram &a, const Histogram &b);

/// H((A+B)/2) - H(A)/2 - H(B)/2 with natural logarithms; inputs are
/// normalized first. Throws EvalError when edges differ.
double jsd(const Histogram &a, const Histogram &b);

}  // namespace smigen::eval

#endif  // SMIGEN_EVAL_HISTOGRAM_H_
