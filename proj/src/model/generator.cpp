//
// smigen - Copyright 2026 The smigen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "smigen/model/generator.h"

#include <string>

namespace smigen::model {

template <class S>
Generator<S>::Generator(const ArchitectureSpec &spec, int vocab_size)
    : spec_(spec), vocab_size_(vocab_size), dropout_(spec.dropout_rate),
      dense_(spec.head_width(), vocab_size, "dense") {
  spec_.validate();
  if (vocab_size < 1) throw SpecError("vocabulary must not be empty");
  for (int k = 0; k < spec_.embedding_layer_count; ++k)
    embeddings_.emplace_back(spec_.unit, vocab_size, spec_.embedding_size,
                             spec_.bidirectional_embedding, true,
                             "embedding" + std::to_string(k));
  for (int k = 0; k < spec_.encoding_layer_count; ++k)
    encoders_.emplace_back(spec_.unit, spec_.embedding_width(), spec_.encoding_size,
                           spec_.bidirectional_encoding, false,
                           "encoding" + std::to_string(k));
  if (spec_.merged())
    merge_.emplace(spec_.merge, spec_.encoding_layer_count, spec_.encoding_width(), "merge");
}

template <class S>
int Generator<S>::embedding_of(std::size_t encoder) const {
  return spec_.family == Family::kD ? static_cast<int>(encoder) : 0;
}

template <class S>
void Generator<S>::initialize(std::uint64_t seed) {
  Rng rng(seed);
  for (auto &layer : embeddings_) layer.initialize(rng);
  for (auto &layer : encoders_) layer.initialize(rng);
  dense_.initialize(rng);
}

template <class S>
std::vector<nn::Param<S> *> Generator<S>::params() {
  std::vector<nn::Param<S> *> out;
  for (auto &layer : embeddings_)
    for (auto *p : layer.params()) out.push_back(p);
  for (auto &layer : encoders_)
    for (auto *p : layer.params()) out.push_back(p);
  if (merge_)
    for (auto *p : merge_->params()) out.push_back(p);
  for (auto *p : dense_.params()) out.push_back(p);
  return out;
}

template <class S>
void Generator<S>::zero_grad() {
  for (auto *p : params()) p->grad.setZero();
}

template <class S>
std::int64_t Generator<S>::parameter_count() {
  std::int64_t n = 0;
  for (auto *p : params()) n += p->value.size();
  return n;
}

template <class S>
const nn::Mat<S> &Generator<S>::features(std::span<const int> tokens, int steps,
                                         bool training, Rng &rng) {
  for (auto &layer : embeddings_) layer.forward_tokens(tokens, steps);
  std::vector<const nn::Mat<S> *> branches;
  for (std::size_t k = 0; k < encoders_.size(); ++k) {
    const nn::Mat<S> &emb = embeddings_[embedding_of(k)].output();
    branches.push_back(&encoders_[k].forward(emb, steps));
  }
  const nn::Mat<S> &merged = merge_ ? merge_->forward(branches) : *branches.front();
  return dropout_.forward(merged, training, rng);
}

template <class S>
const nn::Mat<S> &Generator<S>::forward(std::span<const int> tokens, int steps,
                                        bool training, Rng &rng) {
  return dense_.forward(features(tokens, steps, training, rng));
}

template <class S>
nn::Mat<S> Generator<S>::predict(std::span<const int> tokens, int steps,
                                 double temperature) {
  Rng unused(0);
  return dense_.predict(features(tokens, steps, false, unused), temperature);
}

template <class S>
void Generator<S>::backward_features(const nn::Mat<S> &dfeat) {
  const nn::Mat<S> dmerged = dropout_.backward(dfeat);
  std::vector<nn::Mat<S>> dbranch;
  if (merge_)
    dbranch = merge_->backward(dmerged);
  else
    dbranch.push_back(dmerged);

  std::vector<nn::Mat<S>> demb(embeddings_.size());
  for (std::size_t k = 0; k < encoders_.size(); ++k) {
    nn::Mat<S> d = encoders_[k].backward(dbranch[k]);
    auto &slot = demb[embedding_of(k)];
    if (slot.size() == 0)
      slot = std::move(d);
    else
      slot += d;
  }
  for (std::size_t k = 0; k < embeddings_.size(); ++k) embeddings_[k].backward(demb[k]);
}

template <class S>
void Generator<S>::backward(std::span<const int> labels) {
  backward_features(dense_.backward_cross_entropy(labels));
}

template <class S>
void Generator<S>::backward_probs(const nn::Mat<S> &dprobs) {
  backward_features(dense_.backward(dprobs));
}

template class Generator<float>;
template class Generator<double>;

}  // namespace smigen::model
