//
// smigen - Copyright 2026 The smigen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "smigen/eval/metrics.h"

#include <exception>

#include "smigen/chem/canonical.h"
#include "smigen/chem/kekulize.h"

namespace smigen::eval {

Scored score(const std::string &smiles) {
  Scored s;
  try {
    const chem::MolGraph mol = chem::parse_valid(smiles);
    s.key = chem::canonical_key(mol);
    s.hac = mol.heavy_atom_count();
    s.valid = true;
  } catch (const std::exception &) {
    s.valid = false;
  }
  return s;
}

namespace {

std::optional<double> pct(std::int64_t num, std::int64_t den) {
  if (den == 0) return std::nullopt;
  return 100.0 * static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

BasicMetrics basic_metrics(const std::vector<std::string> &generated,
                           const std::unordered_set<std::string> &training_keys) {
  BasicMetrics m;
  std::unordered_set<std::string> seen;
  for (const std::string &smiles : generated) {
    ++m.generated;
    const Scored s = score(smiles);
    if (!s.valid) continue;
    ++m.valid;
    seen.insert(s.key);
    if (training_keys.count(s.key)) ++m.in_training;
  }
  m.unique = static_cast<std::int64_t>(seen.size());
  m.validity_pct = pct(m.valid, m.generated);
  m.uniqueness_pct = pct(m.unique, m.valid);
  m.training_pct = pct(m.in_training, m.valid);
  return m;
}

NoveltyTimeline novelty_timeline(const std::vector<std::vector<Scored>> &batches) {
  NoveltyTimeline tl;
  std::unordered_set<std::string> seen;
  for (int h = kMinHac; h <= kMaxHac; ++h) tl.by_hac[h].resize(batches.size());

  for (std::size_t t = 0; t < batches.size(); ++t) {
    TimePoint p;
    for (const Scored &s : batches[t]) {
      ++p.generated;
      if (!s.valid) continue;
      ++p.valid;
      const bool fresh = seen.insert(s.key).second;
      if (fresh) ++p.new_unique;
      if (s.hac >= kMinHac && s.hac <= kMaxHac) {
        HacPoint &hp = tl.by_hac[s.hac][t];
        ++hp.valid;
        if (fresh) ++hp.new_unique;
      }
    }
    p.novelty_pct = pct(p.new_unique, p.valid);
    tl.total_generated += p.generated;
    p.cumulative_unique = static_cast<std::int64_t>(seen.size());
    p.efficiency_pct = pct(p.cumulative_unique, tl.total_generated).value_or(0.0);
    tl.points.push_back(p);
  }
  for (auto &[hac, points] : tl.by_hac)
    for (HacPoint &hp : points) hp.novelty_pct = pct(hp.new_unique, hp.valid);

  tl.total_unique = static_cast<std::int64_t>(seen.size());
  tl.efficiency_pct = pct(tl.total_unique, tl.total_generated).value_or(0.0);
  return tl;
}

NoveltyTimeline novelty_timeline(const std::vector<std::vector<std::string>> &batches) {
  std::vector<std::vector<Scored>> scored(batches.size());
  for (std::size_t t = 0; t < batches.size(); ++t)
    for (const std::string &s : batches[t]) scored[t].push_back(score(s));
  return novelty_timeline(scored);
}

}  // namespace smigen::eval
