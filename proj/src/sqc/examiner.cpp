//
// smigen - Copyright 2026 The smigen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "smigen/sqc/examiner.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "smigen/chem/kekulize.h"
#include "smigen/util/random.h"

namespace smigen::sqc {

void SqcConfig::validate() const {
  if (!(target > 0.0 && target < 1.0)) throw ExamError("target must be inside (0, 1)");
  if (n_sample < 1) throw ExamError("n_sample must be positive");
  if (n_pop && *n_pop <= n_sample) throw ExamError("n_pop must exceed n_sample");
  if (patience < 1) throw ExamError("patience must be positive");
  if (!(z > 0.0)) throw ExamError("z must be positive");
  if (max_epochs < 1) throw ExamError("max_epochs must be positive");
}

nlohmann::json to_json(const SqcConfig &cfg) {
  nlohmann::json j = {{"target", cfg.target},     {"n_sample", cfg.n_sample},
                      {"patience", cfg.patience}, {"z", cfg.z},
                      {"max_epochs", cfg.max_epochs}};
  j["n_pop"] = cfg.n_pop ? nlohmann::json(*cfg.n_pop) : nlohmann::json(nullptr);
  return j;
}

SqcConfig sqc_from_json(const nlohmann::json &j) {
  SqcConfig c;
  c.target = j.value("target", c.target);
  c.n_sample = j.value("n_sample", c.n_sample);
  if (j.contains("n_pop") && !j.at("n_pop").is_null()) c.n_pop = j.at("n_pop").get<int>();
  c.patience = j.value("patience", c.patience);
  c.z = j.value("z", c.z);
  c.max_epochs = j.value("max_epochs", c.max_epochs);
  return c;
}

Margins ci_margins(const SqcConfig &cfg) {
  cfg.validate();
  const double p = cfg.target;
  double margin = cfg.z * std::sqrt(p * (1.0 - p) / cfg.n_sample);
  if (cfg.n_pop) {
    const double npop = *cfg.n_pop;
    margin *= std::sqrt((npop - cfg.n_sample) / (npop - 1.0));
  }
  return {std::max(0.0, p - margin), std::min(1.0, p + margin)};
}

Verdict classify(double validity_fraction, const Margins &margins) {
  if (validity_fraction < margins.lower) return Verdict::kBelowLower;
  if (validity_fraction > margins.upper) return Verdict::kAboveUpper;
  return Verdict::kWithinCi;
}

StabilityState update_state(StabilityState state, const ExamRecord &record,
                            const SqcConfig &cfg) {
  if (state.stopped) throw ExamError("run already stopped");
  if (record.epoch != state.last_epoch + 1)
    throw ExamError("non-sequential epoch " + std::to_string(record.epoch));
  state.last_epoch = record.epoch;
  if (record.validity_fraction > state.best_validity) {
    state.best_validity = record.validity_fraction;
    state.best_epoch = record.epoch;
  }

  if (record.verdict == Verdict::kBelowLower) {
    state.streak = 0;
    state.streak_start_epoch.reset();
  } else {
    if (state.streak == 0) state.streak_start_epoch = record.epoch;
    ++state.streak;
  }

  if (state.streak >= cfg.patience) {
    state.stopped = true;
    state.selected_epoch = state.streak_start_epoch;
  } else if (record.epoch >= cfg.max_epochs) {
    state.stopped = true;
    state.unconverged = true;
    state.selected_epoch = state.best_epoch;
  }
  return state;
}

ExamMetric validity_metric() {
  return [](const std::string &s) { return chem::validate(s); };
}

std::uint64_t exam_seed(std::uint64_t run_seed, int epoch) {
  return mix_seed(run_seed ^ 0x5eed5eed5eed5eedULL, static_cast<std::uint64_t>(epoch));
}

ExamRecord examine_epoch(ExamSubject &subject, const SqcConfig &cfg, int epoch,
                         std::uint64_t run_seed, const ExamMetric &metric) {
  ExamRecord r;
  r.epoch = epoch;
  r.n_sample = cfg.n_sample;
  r.sample_seed = exam_seed(run_seed, epoch);
  const auto draws = subject.draw(cfg.n_sample, r.sample_seed);
  r.n_valid = static_cast<int>(std::count_if(draws.begin(), draws.end(), metric));
  r.validity_fraction = static_cast<double>(r.n_valid) / cfg.n_sample;
  r.verdict = classify(r.validity_fraction, ci_margins(cfg));
  return r;
}

ExaminedRun run_examined_training(ExamSubject &subject, const SqcConfig &cfg,
                                  std::uint64_t run_seed, const ExamMetric &metric,
                                  const EpochCallback &on_epoch, bool prune_snapshots) {
  cfg.validate();
  ExaminedRun run;
  for (int epoch = 1; !run.state.stopped; ++epoch) {
    const double loss = subject.train_epoch(epoch);
    subject.snapshot(epoch);
    ExamRecord record = examine_epoch(subject, cfg, epoch, run_seed, metric);
    record.train_loss = loss;
    run.state = update_state(run.state, record, cfg);
    record.streak = run.state.streak;
    run.history.push_back(record);
    if (on_epoch) on_epoch(record, run.state);
  }
  subject.restore(*run.state.selected_epoch);
  if (prune_snapshots) subject.prune(*run.state.selected_epoch);
  return run;
}

std::string exam_csv(const std::vector<ExamRecord> &history) {
  std::string out = "epoch,validity_fraction,verdict,streak,train_loss\n";
  char line[160];
  for (const auto &r : history) {
    std::snprintf(line, sizeof(line), "%d,%.6f,%s,%d,%.6f\n", r.epoch, r.validity_fraction,
                  std::string(to_string(r.verdict)).c_str(), r.streak, r.train_loss);
    out += line;
  }
  return out;
}

}  // namespace smigen::sqc
