//
// smigen - Copyright 2026 The smigen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "smigen/cli/config.h"

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <string_view>

namespace smigen::cli {
namespace {

using nlohmann::json;

void check_keys(const json &j, std::string_view section,
                std::initializer_list<std::string_view> allowed) {
  if (!j.is_object()) throw UsageError(std::string(section) + " must be an object");
  for (const auto &item : j.items()) {
    bool known = false;
    for (std::string_view k : allowed) known = known || item.key() == k;
    if (!known)
      throw UsageError("unknown config key " + std::string(section) + "." + item.key());
  }
}

json corpus_json(const corpus::CorpusConfig &c) {
  return {{"augmentation_attempts", c.augmentation_attempts},
          {"use_canonical_only", c.use_canonical_only},
          {"max_heavy_atoms", c.max_heavy_atoms},
          {"max_sequence_length", c.max_sequence_length}};
}

}  // namespace

void RunConfig::validate() const {
  try {
    corpus.validate();
    architecture.validate();
    sqc.validate();
  } catch (const std::exception &e) {
    throw UsageError(e.what());
  }
  if (training.batch_size < 1) throw UsageError("training.batch_size must be >= 1");
  if (!(training.adam.learning_rate > 0.0))
    throw UsageError("training.learning_rate must be > 0");
  if (generation.count < 0) throw UsageError("generation.count must be >= 0");
  if (generation.batch_size < 1) throw UsageError("generation.batch_size must be >= 1");
  if (!(generation.temperature > 0.0))
    throw UsageError("generation.temperature must be > 0");
  if (generation.max_len < 0) throw UsageError("generation.max_len must be >= 0");
}

std::uint64_t RunConfig::require_seed() const {
  if (!seed) throw UsageError("a seed is required (--seed or config key \"seed\")");
  return *seed;
}

json to_json(const RunConfig &cfg) {
  json j;
  j["corpus_path"] = cfg.corpus_path;
  j["seed"] = cfg.seed ? json(*cfg.seed) : json(nullptr);
  j["corpus"] = corpus_json(cfg.corpus);
  j["architecture"] = model::to_json(cfg.architecture);
  j["sqc"] = sqc::to_json(cfg.sqc);
  j["training"] = {{"batch_size", cfg.training.batch_size},
                   {"learning_rate", cfg.training.adam.learning_rate},
                   {"beta1", cfg.training.adam.beta1},
                   {"beta2", cfg.training.adam.beta2},
                   {"epsilon", cfg.training.adam.epsilon},
                   {"clip_norm", cfg.training.adam.clip_norm}};
  j["generation"] = {{"count", cfg.generation.count},
                     {"batch_size", cfg.generation.batch_size},
                     {"temperature", cfg.generation.temperature},
                     {"max_len", cfg.generation.max_len}};
  return j;
}

RunConfig config_from_json(const json &j) {
  check_keys(j, "config",
             {"corpus_path", "seed", "corpus", "architecture", "sqc", "training",
              "generation"});
  RunConfig cfg;
  try {
    cfg.corpus_path = j.value("corpus_path", cfg.corpus_path);
    if (j.contains("seed") && !j.at("seed").is_null())
      cfg.seed = j.at("seed").get<std::uint64_t>();

    if (j.contains("corpus")) {
      const json &c = j.at("corpus");
      check_keys(c, "corpus",
                 {"augmentation_attempts", "use_canonical_only", "max_heavy_atoms",
                  "max_sequence_length"});
      auto &cc = cfg.corpus;
      cc.augmentation_attempts = c.value("augmentation_attempts", cc.augmentation_attempts);
      cc.use_canonical_only = c.value("use_canonical_only", cc.use_canonical_only);
      cc.max_heavy_atoms = c.value("max_heavy_atoms", cc.max_heavy_atoms);
      cc.max_sequence_length = c.value("max_sequence_length", cc.max_sequence_length);
    }
    if (j.contains("architecture")) {
      check_keys(j.at("architecture"), "architecture",
                 {"family", "unit_kind", "bidirectional_embedding", "bidirectional_encoding",
                  "embedding_size", "encoding_size", "encoding_layer_count",
                  "embedding_layer_count", "merge", "dropout_rate"});
      cfg.architecture = model::spec_from_json(j.at("architecture"));
    }
    if (j.contains("sqc")) {
      check_keys(j.at("sqc"), "sqc",
                 {"target", "n_sample", "n_pop", "patience", "z", "max_epochs"});
      cfg.sqc = sqc::sqc_from_json(j.at("sqc"));
    }
    if (j.contains("training")) {
      const json &t = j.at("training");
      check_keys(t, "training",
                 {"batch_size", "learning_rate", "beta1", "beta2", "epsilon", "clip_norm"});
      auto &tc = cfg.training;
      tc.batch_size = t.value("batch_size", tc.batch_size);
      tc.adam.learning_rate = t.value("learning_rate", tc.adam.learning_rate);
      tc.adam.beta1 = t.value("beta1", tc.adam.beta1);
      tc.adam.beta2 = t.value("beta2", tc.adam.beta2);
      tc.adam.epsilon = t.value("epsilon", tc.adam.epsilon);
      tc.adam.clip_norm = t.value("clip_norm", tc.adam.clip_norm);
    }
    if (j.contains("generation")) {
      const json &g = j.at("generation");
      check_keys(g, "generation", {"count", "batch_size", "temperature", "max_len"});
      auto &gc = cfg.generation;
      gc.count = g.value("count", gc.count);
      gc.batch_size = g.value("batch_size", gc.batch_size);
      gc.temperature = g.value("temperature", gc.temperature);
      gc.max_len = g.value("max_len", gc.max_len);
    }
  } catch (const json::exception &e) {
    throw UsageError(std::string("config: ") + e.what());
  } catch (const std::invalid_argument &e) {
    throw UsageError(std::string("config: ") + e.what());
  }
  return cfg;
}

RunConfig load_config(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot read config " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception &e) {
    throw UsageError("config " + path + ": " + e.what());
  }
  RunConfig cfg = config_from_json(j);
  // Relative input paths are taken relative to the config file.
  const std::filesystem::path corpus(cfg.corpus_path);
  if (!cfg.corpus_path.empty() && corpus.is_relative())
    cfg.corpus_path = (std::filesystem::path(path).parent_path() / corpus).lexically_normal().string();
  return cfg;
}

}  // namespace smigen::cli
