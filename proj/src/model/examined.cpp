//
// smigen - Copyright 2026 The smigen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "smigen/model/examined.h"

#include <stdexcept>

#include "smigen/model/checkpoint.h"

namespace smigen::model {

GeneratorSubject::GeneratorSubject(Generator<float> &model,
                                   const corpus::EncodedDataset &data,
                                   const corpus::Vocabulary &vocab, TrainConfig train,
                                   SampleOptions sampling, std::uint64_t train_seed)
    : model_(model), data_(data), vocab_(vocab), trainer_(model, train),
      sampling_(sampling), rng_(train_seed) { }

double GeneratorSubject::train_epoch(int) { return trainer_.train_epoch(data_, rng_); }

std::vector<std::string> GeneratorSubject::draw(int n, std::uint64_t seed) {
  return generate_batch(model_, vocab_, n, sampling_, seed);
}

void GeneratorSubject::snapshot(int epoch) { snapshots_[epoch] = export_parameters(model_); }

void GeneratorSubject::restore(int epoch) {
  const auto it = snapshots_.find(epoch);
  if (it == snapshots_.end())
    throw std::out_of_range("no snapshot for epoch " + std::to_string(epoch));
  import_parameters(model_, it->second);
}

void GeneratorSubject::prune(int keep) {
  for (auto it = snapshots_.begin(); it != snapshots_.end();)
    it = it->first == keep ? std::next(it) : snapshots_.erase(it);
}

}  // namespace smigen::model
