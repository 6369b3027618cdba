//
// smigen - Copyright 2026 The smigen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SMIGEN_EVAL_METRICS_H_
#define SMIGEN_EVAL_METRICS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace smigen::eval {

class EvalError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// One generated string after validation. `key` and `hac` are set only
/// for valid strings.
struct Scored {
  bool valid = false;
  std::string key;
  int hac = 0;
};

Scored score(const std::string &smiles);

struct BasicMetrics {
  std::int64_t generated = 0;
  std::int64_t valid = 0;
  std::int64_t unique = 0;
  // Valid strings (with repeats) whose key is in the training set.
  std::int64_t in_training = 0;
  // Undefined (nullopt) when the denominator is zero.
  std::optional<double> validity_pct;
  std::optional<double> uniqueness_pct;
  std::optional<double> training_pct;
};

/// validity = valid / generated, uniqueness = distinct keys / valid,
/// training = valid occurrences with a training key / valid.
BasicMetrics basic_metrics(const std::vector<std::string> &generated,
                           const std::unordered_set<std::string> &training_keys);

struct TimePoint {
  std::int64_t generated = 0;
  std::int64_t valid = 0;
  std::int64_t new_unique = 0;
  std::optional<double> novelty_pct;  // new_unique / valid
  std::int64_t cumulative_unique = 0;
  double efficiency_pct = 0.0;  // cumulative_unique / strings generated so far
};

struct HacPoint {
  std::int64_t valid = 0;
  std::int64_t new_unique = 0;
  std::optional<double> novelty_pct;
};

struct NoveltyTimeline {
  std::vector<TimePoint> points;
  std::int64_t total_generated = 0;
  std::int64_t total_unique = 0;
  double efficiency_pct = 0.0;
  // HAC -> one entry per time point; HAC 4-24 only.
  std::map<int, std::vector<HacPoint>> by_hac;
};

inline constexpr int kMinHac = 4;
inline constexpr int kMaxHac = 24;

/// A molecule is new at time point t when its key was not produced by any
/// earlier string (including earlier strings of the same batch).
NoveltyTimeline novelty_timeline(const std::vector<std::vector<std::string>> &batches);

/// Same accounting from pre-scored batches.
NoveltyTimeline novelty_timeline(const std::vector<std::vector<Scored>> &batches);

}  // namespace smigen::eval

#endif  // SMIGEN_EVAL_METRICS_H_
