//
// smigen - Copyright 2026 The smigen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SMIGEN_TESTS_ORACLES_H_
#define SMIGEN_TESTS_ORACLES_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "smigen/chem/molecule.h"
#include "smigen/eval/metrics.h"

// Reference implementations used only by tests. Each one recomputes a
// quantity by a different route than the library.
namespace smigen::testing {

/// Central interval of the sample fraction k/n for k ~ Binomial(n, p):
/// [q(alpha/2), q(1 - alpha/2)] / n with q the exact quantile.
std::pair<double, double> binomial_interval(double p, int n, double alpha = 0.05);

/// Same for sampling n without replacement from a population of `pop`
/// holding round(p * pop) successes.
std::pair<double, double> hypergeometric_interval(double p, int n, int pop,
                                                  double alpha = 0.05);

struct ExamOutcome {
  int stop_epoch = 0;
  int selected_epoch = 0;
  bool unconverged = false;
};

/// Scans windows of `patience` consecutive epochs for the first one whose
/// fractions are all >= lower. Without one, the run ends at max_epochs on
/// the first epoch of maximal fraction.
ExamOutcome simulate_examiner(const std::vector<double> &fractions, double lower,
                              int patience, int max_epochs);

/// Tries every single/double assignment of the aromatic bonds of a parsed
/// (not kekulized) graph. An aromatic atom must end with exactly one
/// aromatic double bond when its valence with those bonds single is not
/// allowed: for bracket atoms, when one more bond would make it allowed;
/// for bare atoms, when a larger allowed valence exists.
bool kekule_feasible_exhaustive(const chem::MolGraph &parsed);

struct RecountPoint {
  long valid = 0;
  long fresh = 0;
  std::optional<double> novelty_pct;
  long cumulative = 0;
  double efficiency_pct = 0.0;
};

/// Every point is recomputed from scratch over the whole prefix of batches.
std::vector<RecountPoint> recount_novelty(const std::vector<std::vector<eval::Scored>> &batches);

double direct_tanimoto_pct(const std::vector<double> &a, const std::vector<double> &b);
/// Both inputs must already sum to one.
double direct_jsd(const std::vector<double> &p, const std::vector<double> &q);

}  // namespace smigen::testing

#endif  // SMIGEN_TESTS_ORACLES_H_
