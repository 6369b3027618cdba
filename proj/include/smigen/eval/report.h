//
// smigen - Copyright 2026 The smigen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SMIGEN_EVAL_REPORT_H_
#define SMIGEN_EVAL_REPORT_H_

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "smigen/chem/properties.h"
#include "smigen/eval/histogram.h"
#include "smigen/eval/metrics.h"

namespace smigen::eval {

/// Attached to every report: validity here comes from the bundled parser
/// and valence rules, not from an external cheminformatics toolkit.
inline constexpr std::string_view kValidityNotice =
    "validity, uniqueness and novelty are judged by the built-in SMILES parser, "
    "kekulizer and valence table, not by an external cheminformatics toolkit; "
    "molecules with rare valence states may be classified differently";

struct PropertySpec {
  std::string name;
  BinRule rule;
  double (*extract)(const chem::PropertyVector &);
};

/// length, hac, mw, rotatable_bonds, frac_cyclic, frac_conjugated,
/// frac_aromatic, frac_c, frac_n, frac_o.
const std::vector<PropertySpec> &property_specs();

struct PropertyComparison {
  std::string property;
  Histogram train;  // normalized
  Histogram generated;  // normalized
  double tanimoto_pct = 0.0;
  double jsd = 0.0;
};

struct EvalReport {
  BasicMetrics basic;
  std::vector<PropertyComparison> properties;
  std::string notice{kValidityNotice};
};

/// Property vectors of the valid strings in `smiles` (restored form);
/// lengths are counted on the substituted encoding.
std::vector<chem::PropertyVector> property_vectors(const std::vector<std::string> &smiles);

/// Histograms are binned jointly, normalized, then compared. Properties
/// are skipped when either side has no valid molecule.
std::vector<PropertyComparison> compare_properties(
    const std::vector<chem::PropertyVector> &train,
    const std::vector<chem::PropertyVector> &generated);

/// `generated` and `training` are restored (unsubstituted) SMILES.
EvalReport evaluate(const std::vector<std::string> &generated,
                    const std::vector<std::string> &training);

nlohmann::json to_json(const EvalReport &report);
nlohmann::json to_json(const NoveltyTimeline &timeline);

/// property,bin_low,bin_high,train_freq,gen_freq
std::string histogram_csv(const EvalReport &report);
/// t,valid,new,novelty%,cumulative,efficiency
std::string timeline_csv(const NoveltyTimeline &timeline);
/// t,hac,valid,new,novelty%
std::string hac_csv(const NoveltyTimeline &timeline);

}  // namespace smigen::eval

#endif  // SMIGEN_EVAL_REPORT_H_
