//
// smigen - Copyright 2026 The smigen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <gtest/gtest.h>

#include <filesystem>
#include <string>
#include <vector>

#include "smigen/cli/commands.h"
#include "smigen/cli/config.h"

namespace smigen::cli {
namespace {

namespace fs = std::filesystem;

std::string fresh_dir(const std::string &name) {
  const fs::path p = fs::temp_directory_path() / ("smigen_cli_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p.string();
}

RunConfig tiny_config(const std::string &corpus_path) {
  RunConfig c;
  c.corpus_path = corpus_path;
  c.seed = 5;
  c.architecture.family = model::Family::kA;
  c.architecture.bidirectional_embedding = false;
  c.architecture.bidirectional_encoding = false;
  c.architecture.embedding_size = 8;
  c.architecture.encoding_size = 8;
  c.architecture.encoding_layer_count = 1;
  c.sqc.target = 0.5;
  c.sqc.n_sample = 20;
  c.sqc.patience = 1;
  c.sqc.max_epochs = 2;
  c.training.batch_size = 16;
  c.generation.count = 25;
  c.generation.batch_size = 10;
  return c;
}

TEST(Config, Defaults) {
  const RunConfig c;
  EXPECT_EQ(c.sqc.target, 0.97);
  EXPECT_EQ(c.sqc.n_sample, 300);
  EXPECT_EQ(c.sqc.patience, 10);
  EXPECT_EQ(c.architecture.dropout_rate, 0.3);
  EXPECT_EQ(c.generation.count, 2000);
  EXPECT_EQ(c.generation.temperature, 1.0);
}

TEST(Config, JsonRoundTrip) {
  RunConfig c = tiny_config("x.smi");
  c.sqc.n_pop = 900;
  const nlohmann::json j = to_json(c);
  EXPECT_EQ(to_json(config_from_json(j)), j);
}

TEST(Config, UnknownKeysRejected) {
  EXPECT_THROW(config_from_json({{"sedd", 1}}), UsageError);
  EXPECT_THROW(config_from_json({{"sqc", {{"patients", 3}}}}), UsageError);
  EXPECT_THROW(config_from_json({{"architecture", {{"family", "E"}}}}), UsageError);
}

TEST(Config, SeedRequired) {
  RunConfig c;
  EXPECT_THROW(c.require_seed(), UsageError);
  c.seed = 0;
  EXPECT_EQ(c.require_seed(), 0u);
}

TEST(Config, RelativeCorpusPath) {
  const std::string dir = fresh_dir("relpath");
  write_text(dir + "/c.json", R"({"corpus_path": "data/in.smi"})");
  EXPECT_EQ(load_config(dir + "/c.json").corpus_path, dir + "/data/in.smi");
  write_text(dir + "/bad.json", "{ nope");
  EXPECT_THROW(load_config(dir + "/bad.json"), UsageError);
  EXPECT_THROW(load_config(dir + "/none.json"), DataError);
}

TEST(Generated, FormatAndRead) {
  const std::string dir = fresh_dir("gen");
  const std::vector<std::vector<std::string>> batches = {{"CCO", "", "#CC"}, {"c1ccccc1"}};
  const std::string text = format_generated(batches);
  EXPECT_EQ(text, "# batch 1\nCCO\n\n#CC\n# batch 2\nc1ccccc1\n");
  write_text(dir + "/g.smi", text);
  const GeneratedFile f = read_generated(dir + "/g.smi");
  EXPECT_TRUE(f.annotated);
  EXPECT_EQ(f.batches, batches);
  write_text(dir + "/plain.smi", "CCO\nCCN\n");
  EXPECT_FALSE(read_generated(dir + "/plain.smi").annotated);
  EXPECT_THROW(cmd_novelty(dir + "/plain.smi", dir), DataError);
}

TEST(MeanSe, Values) {
  const nlohmann::json j = mean_se({1.0, 2.0, 3.0});
  EXPECT_DOUBLE_EQ(j["mean"].get<double>(), 2.0);
  EXPECT_NEAR(j["se"].get<double>(), 1.0 / std::sqrt(3.0), 1e-12);
  EXPECT_TRUE(mean_se({4.0})["se"].is_null());
}

TEST(Prepare, DropsInorganicAndCounts) {
  const std::string dir = fresh_dir("prep");
  write_text(dir + "/in.smi",
             "# comment\nCCO\tethanol\nC[Si](C)(C)C\nOCC\nClCCBr\nc1cc[nH]c1\nC1CC\nCCO.[Na+]\n");
  RunConfig c = tiny_config(dir + "/in.smi");
  const nlohmann::json m = cmd_prepare(c, dir + "/out");
  EXPECT_EQ(m["input_lines"], 7);
  EXPECT_EQ(m["dropped_inorganic"], 2);
  EXPECT_EQ(m["dropped_invalid"], 1);
  EXPECT_EQ(m["molecules"], 3);
  EXPECT_EQ(m["realized_factor"], 1.0);
  const std::string corpus = read_text(dir + "/out/corpus.smi");
  EXPECT_NE(corpus.find("L"), std::string::npos);
  EXPECT_NE(corpus.find("R"), std::string::npos);
  EXPECT_NE(corpus.find("A"), std::string::npos);
  EXPECT_TRUE(fs::exists(dir + "/out/prepare.config.json"));
  EXPECT_TRUE(fs::exists(dir + "/out/molecules.smi"));
}

TEST(Prepare, EmptyOutputIsDataError) {
  const std::string dir = fresh_dir("empty");
  write_text(dir + "/in.smi", "[Na+]\nO\n");
  EXPECT_THROW(cmd_prepare(tiny_config(dir + "/in.smi"), dir), DataError);
  EXPECT_THROW(cmd_prepare(tiny_config(dir + "/missing.smi"), dir), DataError);
}

TEST(Pipeline, RerunsAreByteIdentical) {
  const std::string dir = fresh_dir("pipe");
  RunConfig c = tiny_config(SMIGEN_TEST_DATA_DIR "/corpus_1k.smi");
  c.corpus.use_canonical_only = false;
  c.corpus.augmentation_attempts = 2;
  const std::vector<std::string> files = {"corpus.smi", "molecules.smi", "manifest.json",
                                          "model.ckpt", "exam_history.csv", "generated.smi",
                                          "prepare.config.json", "train.config.json",
                                          "generate.config.json"};
  std::vector<std::string> first;
  // Same output directory both times: the saved configs record paths.
  const std::string out = dir + "/run";
  for (int run = 0; run < 2; ++run) {
    fs::remove_all(out);
    cmd_prepare(c, out);
    cmd_train(c, out, out, nullptr);
    const auto batches = cmd_generate(c, out + "/model.ckpt", out);
    ASSERT_EQ(batches.size(), 3u);
    EXPECT_EQ(batches.back().size(), 5u);
    std::vector<std::string> contents;
    for (const auto &f : files) contents.push_back(read_text(out + "/" + f));
    if (run == 0) {
      first = contents;
    } else {
      for (std::size_t i = 0; i < files.size(); ++i) EXPECT_EQ(contents[i], first[i]) << files[i];
    }
  }
  write_text(dir + "/copy.smi", first[5]);
  const nlohmann::json ev = cmd_evaluate({out + "/generated.smi", dir + "/copy.smi"},
                                         out + "/corpus.smi", dir + "/eval");
  EXPECT_EQ(ev["reports"].size(), 2u);
  EXPECT_EQ(ev["summary"]["validity_pct"]["se"], 0.0);
  EXPECT_TRUE(fs::exists(dir + "/eval/histograms_1.csv"));
  const auto tl = cmd_novelty(out + "/generated.smi", dir + "/nov");
  EXPECT_EQ(tl.points.size(), 3u);
  EXPECT_TRUE(fs::exists(dir + "/nov/novelty_hac.csv"));
}

TEST(Pipeline, DifferentSeedsDiffer) {
  const std::string dir = fresh_dir("seeds");
  RunConfig c = tiny_config(SMIGEN_TEST_DATA_DIR "/corpus_1k.smi");
  cmd_prepare(c, dir);
  cmd_train(c, dir, dir, nullptr);
  cmd_generate(c, dir + "/model.ckpt", dir + "/a");
  c.seed = 6;
  cmd_generate(c, dir + "/model.ckpt", dir + "/b");
  EXPECT_NE(read_text(dir + "/a/generated.smi"), read_text(dir + "/b/generated.smi"));
}

}  // namespace
}  // namespace smigen::cli
