//
// smigen - Copyright 2026 The smigen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SMIGEN_TESTS_SCRIPTED_H_
#define SMIGEN_TESTS_SCRIPTED_H_

#include <cstdint>
#include <string>
#include <vector>

#include "smigen/sqc/examiner.h"
#include "smigen/util/random.h"

namespace smigen::testing {

/// Exam subject without a model: epoch e yields counts[e-1] valid strings
/// ("C") in every draw, the rest invalid ("X").
class ScriptedSubject : public sqc::ExamSubject {
public:
  explicit ScriptedSubject(std::vector<int> valid_counts) : counts_(std::move(valid_counts)) { }

  double train_epoch(int epoch) override {
    epoch_ = epoch;
    return 1.0 / epoch;
  }
  std::vector<std::string> draw(int n, std::uint64_t seed) override {
    const int k = counts_.at(static_cast<std::size_t>(epoch_ - 1));
    std::vector<std::string> out(static_cast<std::size_t>(n), "X");
    for (int i = 0; i < k && i < n; ++i) out[static_cast<std::size_t>(i)] = "C";
    Rng rng(seed);
    rng.shuffle(std::span<std::string>(out));
    return out;
  }
  void snapshot(int epoch) override { snapshots_.push_back(epoch); }
  void restore(int epoch) override { restored_ = epoch; }
  void prune(int keep) override { kept_ = keep; }

  int restored() const { return restored_; }
  int kept() const { return kept_; }
  const std::vector<int> &snapshots() const { return snapshots_; }

private:
  std::vector<int> counts_;
  int epoch_ = 0;
  int restored_ = -1;
  int kept_ = -1;
  std::vector<int> snapshots_;
};

struct ScriptedCase {
  sqc::SqcConfig cfg;
  std::vector<int> counts;  // valid strings per epoch, length max_epochs
};

/// Random config and a count sequence that wanders around the lower
/// margin so that streak resets and unconverged runs both occur.
ScriptedCase random_scripted_case(std::uint64_t seed);

}  // namespace smigen::testing

#endif  // SMIGEN_TESTS_SCRIPTED_H_
