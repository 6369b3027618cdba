//
// smigen - Copyright 2026 The smigen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SMIGEN_MODEL_TRAINER_H_
#define SMIGEN_MODEL_TRAINER_H_

#include "smigen/corpus/vocabulary.h"
#include "smigen/model/generator.h"
#include "smigen/nn/layers.h"

namespace smigen::model {

struct TrainConfig {
  int batch_size = 128;
  nn::AdamConfig adam;
};

/// Mini-batch training. Pairs are grouped by true prefix length so that a
/// batch never contains padding; PAD positions therefore never reach the
/// recurrent layers or the loss.
class Trainer {
public:
  Trainer(Generator<float> &model, TrainConfig config);

  /// One shuffled pass over every pair; returns the mean cross-entropy.
  double train_epoch(const corpus::EncodedDataset &data, Rng &rng);

  const TrainConfig &config() const { return config_; }

private:
  Generator<float> &model_;
  TrainConfig config_;
  nn::Adam<float> adam_;
};

}  // namespace smigen::model

#endif  // SMIGEN_MODEL_TRAINER_H_
