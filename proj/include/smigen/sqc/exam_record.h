//
// smigen - Copyright 2026 The smigen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SMIGEN_SQC_EXAM_RECORD_H_
#define SMIGEN_SQC_EXAM_RECORD_H_

#include <cstdint>
#include <string_view>

#include <json.hpp>

namespace smigen::sqc {

enum class Verdict { kBelowLower, kWithinCi, kAboveUpper };

std::string_view to_string(Verdict v);
Verdict parse_verdict(std::string_view s);

struct ExamRecord {
  int epoch = 0;
  double validity_fraction = 0.0;
  int n_valid = 0;
  int n_sample = 0;
  std::uint64_t sample_seed = 0;
  Verdict verdict = Verdict::kBelowLower;
  // Streak after this record was applied.
  int streak = 0;
  double train_loss = 0.0;
};

nlohmann::json to_json(const ExamRecord &r);
ExamRecord exam_record_from_json(const nlohmann::json &j);

}  // namespace smigen::sqc

#endif  // SMIGEN_SQC_EXAM_RECORD_H_
