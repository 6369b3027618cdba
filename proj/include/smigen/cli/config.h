//
// smigen - Copyright 2026 The smigen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SMIGEN_CLI_CONFIG_H_
#define SMIGEN_CLI_CONFIG_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "smigen/corpus/corpus.h"
#include "smigen/model/architecture.h"
#include "smigen/model/trainer.h"
#include "smigen/sqc/examiner.h"

namespace smigen::cli {

/// Bad flags, unknown config keys or out-of-range values (exit code 1).
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Unreadable or unusable input files (exit code 2).
class DataError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct GenerationConfig {
  int count = 2000;
  // Strings per "# batch" block in the output file.
  int batch_size = 2000;
  double temperature = 1.0;
  // 0 derives the cut-off from the training window.
  int max_len = 0;
};

struct RunConfig {
  std::string corpus_path;  // raw SMILES input of prepare
  std::optional<std::uint64_t> seed;
  corpus::CorpusConfig corpus;
  model::ArchitectureSpec architecture;
  sqc::SqcConfig sqc;
  model::TrainConfig training{64, {}};
  GenerationConfig generation;

  /// Throws UsageError.
  void validate() const;
  std::uint64_t require_seed() const;
};

/// Every key with its value; sufficient to rebuild the config.
nlohmann::json to_json(const RunConfig &cfg);

/// Missing keys keep their defaults; unknown keys throw UsageError.
RunConfig config_from_json(const nlohmann::json &j);

/// Reads a JSON config file; throws UsageError on parse failure and
/// DataError when unreadable. A relative corpus_path is resolved against
/// the directory of the file.
RunConfig load_config(const std::string &path);

}  // namespace smigen::cli

#endif  // SMIGEN_CLI_CONFIG_H_
