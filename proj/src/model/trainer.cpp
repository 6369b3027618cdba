//
// smigen - Copyright 2026 The smigen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "smigen/model/trainer.h"

#include <stdexcept>
#include <vector>

namespace smigen::model {

Trainer::Trainer(Generator<float> &model, TrainConfig config)
    : model_(model), config_(config), adam_(config.adam) {
  if (config_.batch_size < 1) throw std::invalid_argument("batch_size must be >= 1");
}

double Trainer::train_epoch(const corpus::EncodedDataset &data, Rng &rng) {
  if (data.size() == 0) throw std::invalid_argument("empty dataset");
  const int window = data.window();

  std::vector<std::vector<std::size_t>> buckets(window + 1);
  for (std::size_t k = 0; k < data.size(); ++k) buckets[data.prefix_length(k)].push_back(k);

  struct Batch {
    int length;
    std::size_t bucket_offset;
    std::size_t count;
  };
  std::vector<Batch> batches;
  for (int len = 1; len <= window; ++len) {
    auto &bucket = buckets[len];
    rng.shuffle(std::span<std::size_t>(bucket));
    for (std::size_t off = 0; off < bucket.size();
         off += static_cast<std::size_t>(config_.batch_size)) {
      const std::size_t n =
          std::min(bucket.size() - off, static_cast<std::size_t>(config_.batch_size));
      batches.push_back({len, off, n});
    }
  }
  rng.shuffle(std::span<Batch>(batches));

  std::vector<int> prefix(window);
  std::vector<int> tokens;
  std::vector<int> labels;
  double total = 0.0;
  for (const Batch &batch : batches) {
    const int T = batch.length;
    const std::size_t B = batch.count;
    tokens.assign(static_cast<std::size_t>(T) * B, 0);
    labels.resize(B);
    const auto &bucket = buckets[T];
    for (std::size_t b = 0; b < B; ++b) {
      const std::size_t pair = bucket[batch.bucket_offset + b];
      data.prefix_tokens(pair, prefix);
      for (int t = 0; t < T; ++t)
        tokens[static_cast<std::size_t>(t) * B + b] = prefix[window - T + t];
      labels[b] = data.label(pair);
    }
    model_.zero_grad();
    const auto &probs = model_.forward(tokens, T, true, rng);
    total += nn::cross_entropy<float>(probs, labels) * static_cast<double>(B);
    model_.backward(labels);
    adam_.step(model_.params());
  }
  return total / static_cast<double>(data.size());
}

}  // namespace smigen::model
