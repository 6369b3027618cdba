//
// smigen - Copyright 2026 The smigen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SMIGEN_SQC_EXAMINER_H_
#define SMIGEN_SQC_EXAMINER_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "smigen/sqc/exam_record.h"

namespace smigen::sqc {

class ExamError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

struct SqcConfig {
  double target = 0.97;
  int n_sample = 300;
  std::optional<int> n_pop;
  int patience = 10;
  double z = 1.96;
  int max_epochs = 100;

  void validate() const;
};

nlohmann::json to_json(const SqcConfig &cfg);
SqcConfig sqc_from_json(const nlohmann::json &j);

struct Margins {
  double lower = 0.0;
  double upper = 1.0;
};

/// target -/+ z * sqrt(target (1 - target) / n_sample), times
/// sqrt((n_pop - n_sample) / (n_pop - 1)) when n_pop is set; clamped to
/// [0, 1].
Margins ci_margins(const SqcConfig &cfg);

/// Interval bounds count as inside.
Verdict classify(double validity_fraction, const Margins &margins);

struct StabilityState {
  int streak = 0;
  std::optional<int> streak_start_epoch;
  bool stopped = false;
  std::optional<int> selected_epoch;
  // Set when max_epochs ended the run without a full streak.
  bool unconverged = false;
  int last_epoch = 0;
  int best_epoch = 0;
  double best_validity = -1.0;
};

/// Applies the next record. below_lower resets the streak; within_ci and
/// above_upper extend it. A streak of `patience` stops the run and selects
/// its first epoch. Reaching max_epochs first stops the run unconverged and
/// selects the earliest epoch with the highest validity. Throws ExamError
/// for out-of-order epochs or updates after a stop.
StabilityState update_state(StabilityState state, const ExamRecord &record,
                            const SqcConfig &cfg);

/// What the examiner drives. It only trains and draws samples; the
/// examiner never touches parameters or gradients.
class ExamSubject {
public:
  virtual ~ExamSubject() = default;
  /// Trains one epoch and returns its mean loss.
  virtual double train_epoch(int epoch) = 0;
  /// Draws n strings with the given seed, without modifying parameters.
  virtual std::vector<std::string> draw(int n, std::uint64_t seed) = 0;
  /// Retain / restore the parameters of an epoch.
  virtual void snapshot(int epoch) = 0;
  virtual void restore(int epoch) = 0;
  /// Drop all snapshots except `keep`.
  virtual void prune(int keep) = 0;
};

/// Pass/fail per generated string. Validity is the shipped metric.
using ExamMetric = std::function<bool(const std::string &)>;
ExamMetric validity_metric();

/// Seed of the exam draw for an epoch; independent of training randomness.
std::uint64_t exam_seed(std::uint64_t run_seed, int epoch);

/// Draws n_sample strings and classifies the passing fraction. The returned
/// record carries streak 0; update_state fills it.
ExamRecord examine_epoch(ExamSubject &subject, const SqcConfig &cfg, int epoch,
                         std::uint64_t run_seed, const ExamMetric &metric);

struct ExaminedRun {
  std::vector<ExamRecord> history;
  StabilityState state;
};

using EpochCallback = std::function<void(const ExamRecord &, const StabilityState &)>;

/// train -> examine -> update until stopped; then restores the selected
/// epoch. Snapshots other than the selected one are pruned when
/// `prune_snapshots` is set.
ExaminedRun run_examined_training(ExamSubject &subject, const SqcConfig &cfg,
                                  std::uint64_t run_seed, const ExamMetric &metric,
                                  const EpochCallback &on_epoch = {},
                                  bool prune_snapshots = true);

/// CSV with columns epoch,validity_fraction,verdict,streak,train_loss.
std::string exam_csv(const std::vector<ExamRecord> &history);

}  // namespace smigen::sqc

#endif  // SMIGEN_SQC_EXAMINER_H_
