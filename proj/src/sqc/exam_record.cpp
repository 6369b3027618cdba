//
// smigen - Copyright 2026 The smigen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "smigen/sqc/exam_record.h"

#include <stdexcept>
#include <string>

namespace smigen::sqc {

std::string_view to_string(Verdict v) {
  switch (v) {
  case Verdict::kBelowLower: return "below_lower";
  case Verdict::kWithinCi: return "within_ci";
  case Verdict::kAboveUpper: return "above_upper";
  }
  return "?";
}

Verdict parse_verdict(std::string_view s) {
  if (s == "below_lower") return Verdict::kBelowLower;
  if (s == "within_ci") return Verdict::kWithinCi;
  if (s == "above_upper") return Verdict::kAboveUpper;
  throw std::invalid_argument("unknown verdict '" + std::string(s) + "'");
}

nlohmann::json to_json(const ExamRecord &r) {
  return {{"epoch", r.epoch},         {"validity_fraction", r.validity_fraction},
          {"n_valid", r.n_valid},     {"n_sample", r.n_sample},
          {"sample_seed", r.sample_seed}, {"verdict", to_string(r.verdict)},
          {"streak", r.streak},       {"train_loss", r.train_loss}};
}

ExamRecord exam_record_from_json(const nlohmann::json &j) {
  ExamRecord r;
  r.epoch = j.at("epoch").get<int>();
  r.validity_fraction = j.at("validity_fraction").get<double>();
  r.n_valid = j.at("n_valid").get<int>();
  r.n_sample = j.at("n_sample").get<int>();
  r.sample_seed = j.at("sample_seed").get<std::uint64_t>();
  r.verdict = parse_verdict(j.at("verdict").get<std::string>());
  r.streak = j.at("streak").get<int>();
  r.train_loss = j.value("train_loss", 0.0);
  return r;
}

}  // namespace smigen::sqc
