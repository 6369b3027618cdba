//
// smigen - Copyright 2026 The smigen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SMIGEN_CLI_COMMANDS_H_
#define SMIGEN_CLI_COMMANDS_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "smigen/cli/config.h"
#include "smigen/eval/metrics.h"
#include "smigen/eval/report.h"
#include "smigen/model/checkpoint.h"
#include "smigen/sqc/examiner.h"

namespace smigen::cli {

// File names inside a work directory.
inline constexpr const char *kCorpusFile = "corpus.smi";
inline constexpr const char *kMoleculesFile = "molecules.smi";
inline constexpr const char *kManifestFile = "manifest.json";
inline constexpr const char *kCheckpointFile = "model.ckpt";
inline constexpr const char *kExamCsvFile = "exam_history.csv";
inline constexpr const char *kGeneratedFile = "generated.smi";

/// Reads config.corpus_path and writes corpus.smi (substituted, augmented),
/// molecules.smi (one canonical key per molecule), manifest.json and
/// prepare.config.json into out_dir. Returns the manifest.
nlohmann::json cmd_prepare(const RunConfig &config, const std::string &out_dir);

struct TrainOutcome {
  sqc::ExaminedRun run;
  std::string checkpoint_path;
};

/// Trains on <data_dir>/corpus.smi under the examiner and writes
/// model.ckpt, exam_history.csv and train.config.json into out_dir. The
/// history CSV is rewritten after every epoch. `log` may be null.
TrainOutcome cmd_train(const RunConfig &config, const std::string &data_dir,
                       const std::string &out_dir, std::ostream *log);

/// Writes `count` strings to <out_dir>/generated.smi in blocks headed by
/// "# batch k" (k from 1), plus generate.config.json. Block k is drawn
/// with seed mix(seed, k).
std::vector<std::vector<std::string>> cmd_generate(const RunConfig &config,
                                                   const std::string &checkpoint_path,
                                                   const std::string &out_dir);

/// Strings of a generated file grouped by their batch annotation. Lines
/// before the first annotation form batch 0 only when the file has none.
struct GeneratedFile {
  std::vector<std::vector<std::string>> batches;
  bool annotated = false;

  std::vector<std::string> all() const;
};

GeneratedFile read_generated(const std::string &path);
std::string format_generated(const std::vector<std::vector<std::string>> &batches);

/// One report per generated file against the restored training strings,
/// plus mean and standard error over files. Writes evaluation.json and
/// one histograms CSV per file.
nlohmann::json cmd_evaluate(const std::vector<std::string> &generated_paths,
                            const std::string &training_path, const std::string &out_dir);

/// Timeline over the batches of an annotated generated file. Writes
/// novelty.json, novelty.csv and novelty_hac.csv. Throws DataError when
/// the file has no batch annotations.
eval::NoveltyTimeline cmd_novelty(const std::string &generated_path,
                                  const std::string &out_dir);

/// Mean and standard error (sample standard deviation / sqrt(n)).
nlohmann::json mean_se(const std::vector<double> &values);

void write_text(const std::string &path, const std::string &text);
std::string read_text(const std::string &path);

}  // namespace smigen::cli

#endif  // SMIGEN_CLI_COMMANDS_H_
