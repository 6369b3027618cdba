//
// smigen - Copyright 2026 The smigen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "smigen/eval/report.h"

#include <cstdio>
#include <exception>
#include <unordered_set>

#include "smigen/chem/canonical.h"
#include "smigen/chem/kekulize.h"
#include "smigen/corpus/corpus.h"

namespace smigen::eval {
namespace {

nlohmann::json optional_json(const std::optional<double> &v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string fmt_optional(const std::optional<double> &v) {
  return v ? fmt_double(*v) : std::string();
}

}  // namespace

const std::vector<PropertySpec> &property_specs() {
  static const std::vector<PropertySpec> specs = {
      {"length", BinRule::integer(),
       [](const chem::PropertyVector &p) { return double(p.smiles_length); }},
      {"hac", BinRule::integer(), [](const chem::PropertyVector &p) { return double(p.hac); }},
      {"mw", BinRule::molecular_weight(), [](const chem::PropertyVector &p) { return p.mw; }},
      {"rotatable_bonds", BinRule::integer(),
       [](const chem::PropertyVector &p) { return double(p.rotatable_bonds); }},
      {"frac_cyclic", BinRule::fraction(),
       [](const chem::PropertyVector &p) { return p.frac_cyclic; }},
      {"frac_conjugated", BinRule::fraction(),
       [](const chem::PropertyVector &p) { return p.frac_conjugated; }},
      {"frac_aromatic", BinRule::fraction(),
       [](const chem::PropertyVector &p) { return p.frac_aromatic; }},
      {"frac_c", BinRule::fraction(), [](const chem::PropertyVector &p) { return p.frac_c; }},
      {"frac_n", BinRule::fraction(), [](const chem::PropertyVector &p) { return p.frac_n; }},
      {"frac_o", BinRule::fraction(), [](const chem::PropertyVector &p) { return p.frac_o; }},
  };
  return specs;
}

std::vector<chem::PropertyVector> property_vectors(const std::vector<std::string> &smiles) {
  std::vector<chem::PropertyVector> out;
  out.reserve(smiles.size());
  for (const std::string &s : smiles) {
    try {
      const chem::MolGraph mol = chem::parse_valid(s);
      out.push_back(chem::properties(mol, corpus::substitute_chars(s)));
    } catch (const std::exception &) {
    }
  }
  return out;
}

std::vector<PropertyComparison> compare_properties(
    const std::vector<chem::PropertyVector> &train,
    const std::vector<chem::PropertyVector> &generated) {
  std::vector<PropertyComparison> out;
  if (train.empty() || generated.empty()) return out;
  for (const PropertySpec &spec : property_specs()) {
    std::vector<double> a, b;
    a.reserve(train.size());
    b.reserve(generated.size());
    for (const auto &p : train) a.push_back(spec.extract(p));
    for (const auto &p : generated) b.push_back(spec.extract(p));
    auto [ha, hb] = joint_histograms(a, b, spec.rule);
    PropertyComparison c;
    c.property = spec.name;
    c.train = normalize(std::move(ha));
    c.generated = normalize(std::move(hb));
    c.tanimoto_pct = tanimoto_match(c.train, c.generated);
    c.jsd = jsd(c.train, c.generated);
    out.push_back(std::move(c));
  }
  return out;
}

EvalReport evaluate(const std::vector<std::string> &generated,
                    const std::vector<std::string> &training) {
  std::unordered_set<std::string> keys;
  for (const std::string &s : training) {
    const Scored sc = score(s);
    if (sc.valid) keys.insert(sc.key);
  }
  EvalReport report;
  report.basic = basic_metrics(generated, keys);
  report.properties = compare_properties(property_vectors(training),
                                         property_vectors(generated));
  return report;
}

nlohmann::json to_json(const EvalReport &report) {
  nlohmann::json j;
  j["generated"] = report.basic.generated;
  j["valid"] = report.basic.valid;
  j["unique"] = report.basic.unique;
  j["in_training"] = report.basic.in_training;
  j["validity_pct"] = optional_json(report.basic.validity_pct);
  j["uniqueness_pct"] = optional_json(report.basic.uniqueness_pct);
  j["training_pct"] = optional_json(report.basic.training_pct);
  nlohmann::json props = nlohmann::json::object();
  for (const auto &c : report.properties)
    props[c.property] = {{"tanimoto_match_pct", c.tanimoto_pct}, {"jsd", c.jsd}};
  j["properties"] = std::move(props);
  j["notice"] = report.notice;
  return j;
}

nlohmann::json to_json(const NoveltyTimeline &tl) {
  nlohmann::json points = nlohmann::json::array();
  for (std::size_t t = 0; t < tl.points.size(); ++t) {
    const TimePoint &p = tl.points[t];
    points.push_back({{"t", t + 1},
                      {"generated", p.generated},
                      {"valid", p.valid},
                      {"new", p.new_unique},
                      {"novelty_pct", optional_json(p.novelty_pct)},
                      {"cumulative", p.cumulative_unique},
                      {"efficiency_pct", p.efficiency_pct}});
  }
  return {{"points", std::move(points)},
          {"total_generated", tl.total_generated},
          {"total_unique", tl.total_unique},
          {"efficiency_pct", tl.efficiency_pct},
          {"notice", std::string(kValidityNotice)}};
}

std::string histogram_csv(const EvalReport &report) {
  std::string out = "property,bin_low,bin_high,train_freq,gen_freq\n";
  for (const auto &c : report.properties) {
    for (std::size_t i = 0; i < c.train.bins(); ++i) {
      out += c.property + ',' + fmt_double(c.train.edges[i]) + ','
           + fmt_double(c.train.edges[i + 1]) + ',' + fmt_double(c.train.counts[i]) + ','
           + fmt_double(c.generated.counts[i]) + '\n';
    }
  }
  return out;
}

std::string timeline_csv(const NoveltyTimeline &tl) {
  std::string out = "t,valid,new,novelty%,cumulative,efficiency\n";
  for (std::size_t t = 0; t < tl.points.size(); ++t) {
    const TimePoint &p = tl.points[t];
    out += std::to_string(t + 1) + ',' + std::to_string(p.valid) + ','
         + std::to_string(p.new_unique) + ',' + fmt_optional(p.novelty_pct) + ','
         + std::to_string(p.cumulative_unique) + ',' + fmt_double(p.efficiency_pct) + '\n';
  }
  return out;
}

std::string hac_csv(const NoveltyTimeline &tl) {
  std::string out = "t,hac,valid,new,novelty%\n";
  for (std::size_t t = 0; t < tl.points.size(); ++t) {
    for (const auto &[hac, points] : tl.by_hac) {
      const HacPoint &hp = points[t];
      out += std::to_string(t + 1) + ',' + std::to_string(hac) + ','
           + std::to_string(hp.valid) + ',' + std::to_string(hp.new_unique) + ','
           + fmt_optional(hp.novelty_pct) + '\n';
    }
  }
  return out;
}

}  // namespace smigen::eval
