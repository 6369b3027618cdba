//
// smigen - Copyright 2026 The smigen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "smigen/eval/histogram.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "smigen/eval/metrics.h"

namespace smigen::eval {
namespace {

// The small offset keeps values such as 0.06 / 0.02 in their own bin.
long long bin_index(double v, double width) {
  return static_cast<long long>(std::floor(v / width + 1e-9));
}

void fill(Histogram &h, std::span<const double> values, long long lo, double width) {
  for (double v : values) h.counts[static_cast<std::size_t>(bin_index(v, width) - lo)] += 1.0;
}

Histogram empty_bins(long long lo, long long hi, double width) {
  Histogram h;
  const std::size_t n = static_cast<std::size_t>(hi - lo + 1);
  h.counts.assign(n, 0.0);
  h.edges.resize(n + 1);
  for (std::size_t i = 0; i <= n; ++i)
    h.edges[i] = static_cast<double>(lo + static_cast<long long>(i)) * width;
  return h;
}

void require_same_edges(const Histogram &a, const Histogram &b) {
  if (a.edges != b.edges || a.counts.size() != b.counts.size())
    throw EvalError("histograms have different bins");
}

double entropy(const std::vector<double> &p) {
  double h = 0.0;
  for (double x : p)
    if (x > 0.0) h -= x * std::log(x);
  return h;
}

std::vector<double> probabilities(const Histogram &h) {
  const double total = std::accumulate(h.counts.begin(), h.counts.end(), 0.0);
  std::vector<double> p(h.counts);
  if (total > 0.0)
    for (double &x : p) x /= total;
  return p;
}

}  // namespace

Histogram histogram(std::span<const double> values, const BinRule &rule) {
  if (values.empty()) throw EvalError("EmptyInput");
  long long lo = bin_index(values.front(), rule.width), hi = lo;
  for (double v : values) {
    lo = std::min(lo, bin_index(v, rule.width));
    hi = std::max(hi, bin_index(v, rule.width));
  }
  Histogram h = empty_bins(lo, hi, rule.width);
  fill(h, values, lo, rule.width);
  return h;
}

std::pair<Histogram, Histogram> joint_histograms(std::span<const double> a,
                                                 std::span<const double> b,
                                                 const BinRule &rule) {
  if (a.empty() || b.empty()) throw EvalError("EmptyInput");
  long long lo = bin_index(a.front(), rule.width), hi = lo;
  for (auto set : {a, b}) {
    for (double v : set) {
      lo = std::min(lo, bin_index(v, rule.width));
      hi = std::max(hi, bin_index(v, rule.width));
    }
  }
  Histogram ha = empty_bins(lo, hi, rule.width);
  Histogram hb = ha;
  fill(ha, a, lo, rule.width);
  fill(hb, b, lo, rule.width);
  return {std::move(ha), std::move(hb)};
}

Histogram normalize(Histogram h) {
  h.counts = probabilities(h);
  h.normalized = true;
  return h;
}

double tanimoto_match(const Histogram &a, const Histogram &b) {
  require_same_edges(a, b);
  double ab = 0.0, aa = 0.0, bb = 0.0;
  for (std::size_t i = 0; i < a.counts.size(); ++i) {
    ab += a.counts[i] * b.counts[i];
    aa += a.counts[i] * a.counts[i];
    bb += b.counts[i] * b.counts[i];
  }
  const double denom = aa + bb - ab;
  if (denom <= 0.0) return 100.0;  // both empty
  return 100.0 * ab / denom;
}

double jsd(const Histogram &a, const Histogram &b) {
  require_same_edges(a, b);
  const std::vector<double> p = probabilities(a), q = probabilities(b);
  std::vector<double> m(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) m[i] = 0.5 * (p[i] + q[i]);
  const double d = entropy(m) - 0.5 * entropy(p) - 0.5 * entropy(q);
  return std::clamp(d, 0.0, std::log(2.0));
}

}  // namespace smigen::eval
