//
// smigen - Copyright 2026 The smigen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SMIGEN_MODEL_EXAMINED_H_
#define SMIGEN_MODEL_EXAMINED_H_

#include <cstdint>
#include <map>
#include <vector>

#include "smigen/corpus/vocabulary.h"
#include "smigen/model/generator.h"
#include "smigen/model/sampler.h"
#include "smigen/model/trainer.h"
#include "smigen/nn/param.h"
#include "smigen/sqc/examiner.h"

namespace smigen::model {

/// Connects a generator and its training data to the examiner. Every
/// epoch's parameters are kept in memory until the run is resolved.
class GeneratorSubject : public sqc::ExamSubject {
public:
  GeneratorSubject(Generator<float> &model, const corpus::EncodedDataset &data,
                   const corpus::Vocabulary &vocab, TrainConfig train,
                   SampleOptions sampling, std::uint64_t train_seed);

  double train_epoch(int epoch) override;
  std::vector<std::string> draw(int n, std::uint64_t seed) override;
  void snapshot(int epoch) override;
  void restore(int epoch) override;
  void prune(int keep) override;

  std::size_t snapshot_count() const { return snapshots_.size(); }

private:
  Generator<float> &model_;
  const corpus::EncodedDataset &data_;
  const corpus::Vocabulary &vocab_;
  Trainer trainer_;
  SampleOptions sampling_;
  Rng rng_;
  std::map<int, std::vector<nn::Tensor>> snapshots_;
};

}  // namespace smigen::model

#endif  // SMIGEN_MODEL_EXAMINED_H_
