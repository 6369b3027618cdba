//
// smigen - Copyright 2026 The smigen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SMIGEN_MODEL_GENERATOR_H_
#define SMIGEN_MODEL_GENERATOR_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "smigen/model/architecture.h"
#include "smigen/nn/layers.h"
#include "smigen/nn/recurrent.h"

namespace smigen::model {

/// Embedding recurrent layer(s) returning sequences, encoding layer(s)
/// returning their final state, optional merge, dropout, dense softmax.
/// Inputs are token ids, time-major: tokens[t * B + b].
template <class S>
class Generator {
public:
  Generator(const ArchitectureSpec &spec, int vocab_size);

  const ArchitectureSpec &spec() const { return spec_; }
  int vocab_size() const { return vocab_size_; }

  void initialize(std::uint64_t seed);

  /// B x V next-token probabilities. Dropout is active only with
  /// `training`; `rng` drives the dropout masks.
  const nn::Mat<S> &forward(std::span<const int> tokens, int steps, bool training,
                            Rng &rng);

  /// Inference probabilities with temperature.
  nn::Mat<S> predict(std::span<const int> tokens, int steps, double temperature);

  /// Back-propagates mean cross-entropy of the last forward pass.
  void backward(std::span<const int> labels);
  /// Back-propagates an arbitrary upstream gradient on the probabilities.
  void backward_probs(const nn::Mat<S> &dprobs);

  std::vector<nn::Param<S> *> params();
  void zero_grad();
  std::int64_t parameter_count();

private:
  const nn::Mat<S> &features(std::span<const int> tokens, int steps, bool training,
                             Rng &rng);
  void backward_features(const nn::Mat<S> &dfeat);
  int embedding_of(std::size_t encoder) const;

  ArchitectureSpec spec_;
  int vocab_size_;
  std::vector<nn::RecurrentBlock<S>> embeddings_;
  std::vector<nn::RecurrentBlock<S>> encoders_;
  std::optional<nn::Merge<S>> merge_;
  nn::Dropout<S> dropout_;
  nn::DenseSoftmax<S> dense_;
};

extern template class Generator<float>;
extern template class Generator<double>;

}  // namespace smigen::model

#endif  // SMIGEN_MODEL_GENERATOR_H_
