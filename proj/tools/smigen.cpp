//
// smigen - Copyright 2026 The smigen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "smigen/cli/commands.h"
#include "smigen/cli/config.h"
#include "smigen/corpus/corpus.h"
#include "smigen/model/checkpoint.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitUnconverged = 3;

struct Flags {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string out = ".";
  std::string checkpoint;
  std::optional<int> n;
  std::optional<double> temperature;
  std::string data;
  std::string training;
  std::string input;
  std::vector<std::string> generated;
};

smigen::cli::RunConfig resolve(const Flags &f) {
  smigen::cli::RunConfig cfg;
  if (!f.config.empty()) cfg = smigen::cli::load_config(f.config);
  if (f.seed) cfg.seed = f.seed;
  if (f.n) cfg.generation.count = *f.n;
  if (f.temperature) cfg.generation.temperature = *f.temperature;
  if (!f.input.empty()) cfg.corpus_path = f.input;
  return cfg;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"smigen: SMILES generator trained under statistical examination"};
  app.require_subcommand(1);
  Flags f;

  auto common = [&](CLI::App *sub) {
    sub->add_option("--config", f.config, "JSON run configuration")->check(CLI::ExistingFile);
    sub->add_option("--seed", f.seed, "global seed (required here or in the config)");
    sub->add_option("--out", f.out, "output directory");
  };

  CLI::App *prepare = app.add_subcommand("prepare", "standardize, filter, augment a corpus");
  common(prepare);
  prepare->add_option("input", f.input, "raw SMILES file (overrides corpus_path)");

  CLI::App *train = app.add_subcommand("train", "examined training on a prepared corpus");
  common(train);
  train->add_option("--data", f.data, "directory holding corpus.smi (default: --out)");

  CLI::App *generate = app.add_subcommand("generate", "sample SMILES from a checkpoint");
  common(generate);
  generate->add_option("--checkpoint", f.checkpoint, "model checkpoint")->required();
  generate->add_option("--n", f.n, "number of strings")->check(CLI::NonNegativeNumber);
  generate->add_option("--temperature", f.temperature, "softmax temperature")
      ->check(CLI::PositiveNumber);

  CLI::App *evaluate = app.add_subcommand("evaluate", "metrics and property comparison");
  evaluate->add_option("--out", f.out, "output directory");
  evaluate->add_option("--training", f.training, "prepared corpus.smi")->required();
  evaluate->add_option("--checkpoint", f.checkpoint, "checkpoint (recorded only)");
  evaluate->add_option("generated", f.generated, "generated files, one per model")
      ->required();

  CLI::App *novelty = app.add_subcommand("novelty", "time-resolved novelty and efficiency");
  novelty->add_option("--out", f.out, "output directory");
  novelty->add_option("generated", f.generated, "batch-annotated generated file")
      ->required()
      ->expected(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  namespace cli = smigen::cli;
  try {
    if (prepare->parsed()) {
      const auto manifest = cli::cmd_prepare(resolve(f), f.out);
      std::cerr << manifest["molecules"] << " molecules, " << manifest["corpus_strings"]
                << " strings, factor " << manifest["realized_factor"] << "\n";
    } else if (train->parsed()) {
      const auto outcome = cli::cmd_train(resolve(f), f.data.empty() ? f.out : f.data, f.out,
                                          &std::cerr);
      if (outcome.run.state.unconverged) return kExitUnconverged;
    } else if (generate->parsed()) {
      const auto batches = cli::cmd_generate(resolve(f), f.checkpoint, f.out);
      std::cerr << batches.size() << " batches written\n";
    } else if (evaluate->parsed()) {
      const auto report = cli::cmd_evaluate(f.generated, f.training, f.out);
      std::cout << report["summary"].dump(2) << "\n";
    } else if (novelty->parsed()) {
      const auto tl = cli::cmd_novelty(f.generated.front(), f.out);
      std::cout << tl.total_unique << " unique of " << tl.total_generated << " ("
                << tl.efficiency_pct << "% efficiency)\n";
    }
  } catch (const cli::UsageError &e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const cli::DataError &e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kExitData;
  } catch (const smigen::corpus::CorpusError &e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kExitData;
  } catch (const smigen::model::CheckpointError &e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitOk;
}
