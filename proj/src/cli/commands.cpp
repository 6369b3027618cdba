//
// smigen - Copyright 2026 The smigen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "smigen/cli/commands.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "smigen/chem/canonical.h"
#include "smigen/chem/kekulize.h"
#include "smigen/chem/smiles_parser.h"
#include "smigen/corpus/vocabulary.h"
#include "smigen/model/examined.h"
#include "smigen/model/sampler.h"
#include "smigen/util/random.h"

namespace smigen::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string join(const std::string &dir, const std::string &name) {
  return (fs::path(dir) / name).string();
}

void ensure_dir(const std::string &dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw DataError("cannot create " + dir + ": " + ec.message());
}

std::string lines_text(const std::vector<std::string> &lines) {
  std::string out;
  for (const std::string &l : lines) {
    out += l;
    out += '\n';
  }
  return out;
}

void write_json(const std::string &path, const json &j) { write_text(path, j.dump(2) + "\n"); }

void write_resolved(const std::string &out_dir, const std::string &verb, json resolved) {
  write_json(join(out_dir, verb + ".config.json"), resolved);
}

std::vector<std::string> read_lines_or_throw(const std::string &path) {
  try {
    return corpus::read_smiles_lines(path);
  } catch (const corpus::CorpusError &e) {
    throw DataError(e.what());
  }
}

bool is_batch_marker(const std::string &line) {
  static constexpr std::string_view kPrefix = "# batch ";
  if (line.rfind(kPrefix, 0) != 0 || line.size() == kPrefix.size()) return false;
  for (std::size_t i = kPrefix.size(); i < line.size(); ++i)
    if (line[i] < '0' || line[i] > '9') return false;
  return true;
}

}  // namespace

void write_text(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write " + path);
  out << text;
  if (!out) throw DataError("write failed for " + path);
}

std::string read_text(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json cmd_prepare(const RunConfig &config, const std::string &out_dir) {
  config.validate();
  const std::uint64_t seed = config.require_seed();
  const std::vector<std::string> lines = read_lines_or_throw(config.corpus_path);

  std::int64_t components = 0, invalid = 0, inorganic = 0, oversized = 0, accepted = 0;
  std::set<std::string> keys;
  for (const std::string &line : lines) {
    const corpus::Standardized st = corpus::standardize(line);
    invalid += st.dropped;
    for (const std::string &key : st.components) {
      ++components;
      chem::MolGraph mol;
      try {
        mol = chem::kekulize(chem::parse(key));
      } catch (const std::exception &) {
        ++invalid;
        continue;
      }
      if (!corpus::filter_organic(mol)) {
        ++inorganic;
        continue;
      }
      if (!chem::valence_ok(mol)) {
        ++invalid;
        continue;
      }
      if (config.corpus.max_heavy_atoms > 0
          && mol.heavy_atom_count() > config.corpus.max_heavy_atoms) {
        ++oversized;
        continue;
      }
      ++accepted;
      keys.insert(key);
    }
  }
  if (keys.empty()) throw DataError("no molecule survived preparation");

  const std::vector<std::string> molecules(keys.begin(), keys.end());
  std::vector<std::string> strings;
  double factor = 1.0;
  if (config.corpus.use_canonical_only) {
    strings = molecules;
  } else {
    std::vector<chem::MolGraph> graphs;
    graphs.reserve(molecules.size());
    for (const std::string &k : molecules) graphs.push_back(chem::parse_valid(k));
    corpus::Augmented aug =
        corpus::augment(graphs, config.corpus.augmentation_attempts, mix_seed(seed, 1));
    strings = std::move(aug.smiles);
    factor = aug.realized_factor;
  }
  for (std::string &s : strings) s = corpus::substitute_chars(s);

  const corpus::Vocabulary vocab = corpus::build_vocabulary(strings);
  const int window = corpus::default_window(strings, config.corpus.max_sequence_length);

  json manifest;
  manifest["input_lines"] = lines.size();
  manifest["components"] = components;
  manifest["dropped_invalid"] = invalid;
  manifest["dropped_inorganic"] = inorganic;
  manifest["dropped_oversized"] = oversized;
  manifest["duplicates"] = accepted - static_cast<std::int64_t>(molecules.size());
  manifest["molecules"] = molecules.size();
  manifest["corpus_strings"] = strings.size();
  manifest["realized_factor"] = factor;
  manifest["vocabulary"] = vocab.characters();
  manifest["vocabulary_size"] = vocab.size();
  manifest["window"] = window;

  ensure_dir(out_dir);
  write_text(join(out_dir, kCorpusFile), lines_text(strings));
  write_text(join(out_dir, kMoleculesFile), lines_text(molecules));
  write_json(join(out_dir, kManifestFile), manifest);
  write_resolved(out_dir, "prepare", to_json(config));
  return manifest;
}

TrainOutcome cmd_train(const RunConfig &config, const std::string &data_dir,
                       const std::string &out_dir, std::ostream *log) {
  config.validate();
  const std::uint64_t seed = config.require_seed();
  const std::string corpus_path = join(data_dir, kCorpusFile);
  const std::vector<std::string> strings = read_lines_or_throw(corpus_path);
  if (strings.empty()) throw DataError("empty corpus " + corpus_path);

  corpus::Vocabulary vocab;
  corpus::EncodedDataset data;
  int window = 0;
  try {
    vocab = corpus::build_vocabulary(strings);
    window = corpus::default_window(strings, config.corpus.max_sequence_length);
    data = corpus::encode(strings, vocab, window);
  } catch (const corpus::CorpusError &e) {
    throw DataError(e.what());
  }

  model::Generator<float> generator(config.architecture, vocab.size());
  generator.initialize(mix_seed(seed, 1));

  model::SampleOptions sampling;
  sampling.window = window;
  sampling.max_len = config.generation.max_len > 0 ? config.generation.max_len
                                                   : model::default_max_len(window);
  model::GeneratorSubject subject(generator, data, vocab, config.training, sampling,
                                  mix_seed(seed, 2));

  ensure_dir(out_dir);
  const std::string csv_path = join(out_dir, kExamCsvFile);
  std::vector<sqc::ExamRecord> so_far;
  if (log) {
    *log << "corpus " << strings.size() << " strings, |V|=" << vocab.size()
         << ", window " << window << ", " << data.size() << " pairs, "
         << generator.parameter_count() << " parameters\n";
    log->flush();
  }
  auto on_epoch = [&](const sqc::ExamRecord &r, const sqc::StabilityState &s) {
    so_far.push_back(r);
    write_text(csv_path, sqc::exam_csv(so_far));
    if (log) {
      *log << "epoch " << r.epoch << " loss " << r.train_loss << " validity "
           << r.validity_fraction << " " << sqc::to_string(r.verdict) << " streak "
           << s.streak << "\n";
      log->flush();
    }
  };
  TrainOutcome out;
  out.run = sqc::run_examined_training(subject, config.sqc, seed, sqc::validity_metric(),
                                       on_epoch);

  model::ModelCheckpoint ckpt;
  ckpt.spec = config.architecture;
  ckpt.vocab = vocab;
  ckpt.window = window;
  ckpt.epoch = *out.run.state.selected_epoch;
  ckpt.exam_history = out.run.history;
  ckpt.parameters = model::export_parameters(generator);
  ckpt.metadata = {{"config", to_json(config)},
                   {"stop_epoch", out.run.state.last_epoch},
                   {"unconverged", out.run.state.unconverged},
                   {"margins",
                    {{"lower", sqc::ci_margins(config.sqc).lower},
                     {"upper", sqc::ci_margins(config.sqc).upper}}}};
  out.checkpoint_path = join(out_dir, kCheckpointFile);
  model::save_checkpoint(ckpt, out.checkpoint_path);
  write_text(csv_path, sqc::exam_csv(out.run.history));

  json resolved = to_json(config);
  resolved["data_dir"] = data_dir;
  write_resolved(out_dir, "train", resolved);
  if (log) {
    *log << (out.run.state.unconverged ? "unconverged" : "stopped") << " at epoch "
         << out.run.state.last_epoch << ", selected epoch " << ckpt.epoch << "\n";
  }
  return out;
}

std::vector<std::vector<std::string>> cmd_generate(const RunConfig &config,
                                                   const std::string &checkpoint_path,
                                                   const std::string &out_dir) {
  config.validate();
  const std::uint64_t seed = config.require_seed();
  model::ModelCheckpoint ckpt;
  try {
    ckpt = model::load_checkpoint(checkpoint_path);
  } catch (const model::CheckpointError &e) {
    throw DataError(e.what());
  }
  model::Generator<float> generator = [&] {
    try {
      return model::restore_generator(ckpt);
    } catch (const model::CheckpointError &e) {
      throw DataError(e.what());
    }
  }();

  model::SampleOptions opts;
  opts.window = ckpt.window;
  opts.temperature = config.generation.temperature;
  opts.max_len = config.generation.max_len > 0 ? config.generation.max_len
                                               : model::default_max_len(ckpt.window);

  std::vector<std::vector<std::string>> batches;
  const int total = config.generation.count;
  for (int done = 0, k = 1; done < total; ++k) {
    const int n = std::min(config.generation.batch_size, total - done);
    batches.push_back(
        model::generate_batch(generator, ckpt.vocab, n, opts, mix_seed(seed, k)));
    done += n;
  }

  ensure_dir(out_dir);
  write_text(join(out_dir, kGeneratedFile), format_generated(batches));
  json resolved = to_json(config);
  resolved["checkpoint"] = checkpoint_path;
  resolved["checkpoint_epoch"] = ckpt.epoch;
  resolved["resolved_max_len"] = opts.max_len;
  write_resolved(out_dir, "generate", resolved);
  return batches;
}

std::vector<std::string> GeneratedFile::all() const {
  std::vector<std::string> out;
  for (const auto &b : batches) out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::string format_generated(const std::vector<std::vector<std::string>> &batches) {
  std::string out;
  for (std::size_t k = 0; k < batches.size(); ++k) {
    out += "# batch " + std::to_string(k + 1) + "\n";
    out += lines_text(batches[k]);
  }
  return out;
}

GeneratedFile read_generated(const std::string &path) {
  std::istringstream in(read_text(path));
  GeneratedFile file;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (is_batch_marker(line)) {
      file.annotated = true;
      file.batches.emplace_back();
      continue;
    }
    // Empty lines are kept: an empty generated string is still a sample.
    if (file.batches.empty()) file.batches.emplace_back();
    file.batches.back().push_back(line);
  }
  return file;
}

json mean_se(const std::vector<double> &values) {
  const double n = static_cast<double>(values.size());
  if (values.empty()) return {{"mean", nullptr}, {"se", nullptr}, {"n", 0}};
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= n;
  json se = nullptr;
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    se = std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
  }
  return {{"mean", mean}, {"se", se}, {"n", values.size()}};
}

json cmd_evaluate(const std::vector<std::string> &generated_paths,
                  const std::string &training_path, const std::string &out_dir) {
  if (generated_paths.empty()) throw UsageError("no generated file given");
  std::vector<std::string> training = read_lines_or_throw(training_path);
  if (training.empty()) throw DataError("empty training file " + training_path);
  for (std::string &s : training) s = corpus::restore_chars(s);

  ensure_dir(out_dir);
  json reports = json::array();
  std::map<std::string, std::vector<double>> series;
  for (std::size_t i = 0; i < generated_paths.size(); ++i) {
    const std::vector<std::string> generated = read_generated(generated_paths[i]).all();
    if (generated.empty()) throw DataError("empty generated file " + generated_paths[i]);
    const eval::EvalReport report = eval::evaluate(generated, training);
    json j = eval::to_json(report);
    j["file"] = generated_paths[i];
    reports.push_back(j);
    const std::string csv = generated_paths.size() == 1
                                ? std::string("histograms.csv")
                                : "histograms_" + std::to_string(i + 1) + ".csv";
    write_text(join(out_dir, csv), eval::histogram_csv(report));

    auto add = [&](const std::string &k, const std::optional<double> &v) {
      if (v) series[k].push_back(*v);
    };
    add("validity_pct", report.basic.validity_pct);
    add("uniqueness_pct", report.basic.uniqueness_pct);
    add("training_pct", report.basic.training_pct);
    for (const auto &c : report.properties) {
      series[c.property + ".tanimoto_match_pct"].push_back(c.tanimoto_pct);
      series[c.property + ".jsd"].push_back(c.jsd);
    }
  }
  json summary = json::object();
  for (const auto &[k, v] : series) summary[k] = mean_se(v);

  json out = {{"training", training_path},
              {"reports", reports},
              {"summary", summary},
              {"notice", std::string(eval::kValidityNotice)}};
  write_json(join(out_dir, "evaluation.json"), out);
  return out;
}

eval::NoveltyTimeline cmd_novelty(const std::string &generated_path,
                                  const std::string &out_dir) {
  const GeneratedFile file = read_generated(generated_path);
  if (!file.annotated)
    throw DataError(generated_path + " has no \"# batch\" annotations");
  const eval::NoveltyTimeline tl = eval::novelty_timeline(file.batches);
  ensure_dir(out_dir);
  json j = eval::to_json(tl);
  j["file"] = generated_path;
  write_json(join(out_dir, "novelty.json"), j);
  write_text(join(out_dir, "novelty.csv"), eval::timeline_csv(tl));
  write_text(join(out_dir, "novelty_hac.csv"), eval::hac_csv(tl));
  return tl;
}

}  // namespace smigen::cli
