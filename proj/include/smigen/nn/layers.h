//
// smigen - Copyright 2026 The smigen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SMIGEN_NN_LAYERS_H_
#define SMIGEN_NN_LAYERS_H_

#include <span>
#include <string>
#include <vector>

#include "smigen/nn/param.h"

namespace smigen::nn {

enum class MergeKind { kConcatenate, kAverage, kLearnableAverage };

/// Combines parallel branches of shape B x w_i. The learnable average uses
/// softmax(logits) as convex weights.
template <class S>
class Merge {
public:
  Merge(MergeKind kind, int branches, int width, const std::string &name);

  MergeKind kind() const { return kind_; }
  int output_size() const;
  /// Normalized branch weights (learnable average only).
  Mat<S> weights() const;

  const Mat<S> &forward(const std::vector<const Mat<S> *> &inputs);
  std::vector<Mat<S>> backward(const Mat<S> &dout);

  std::vector<Param<S> *> params();

private:
  MergeKind kind_;
  int branches_;
  int width_;
  Param<S> logits_;
  std::vector<const Mat<S> *> inputs_;
  Mat<S> out_;
};

/// Inverted dropout: kept units are scaled by 1/(1-rate) during training,
/// inference is the identity.
template <class S>
class Dropout {
public:
  explicit Dropout(double rate);

  double rate() const { return rate_; }
  const Mat<S> &forward(const Mat<S> &x, bool training, Rng &rng);
  Mat<S> backward(const Mat<S> &dout) const;

private:
  double rate_;
  bool training_ = false;
  Mat<S> mask_;
  Mat<S> out_;
};

/// Affine map followed by a row-wise softmax.
template <class S>
class DenseSoftmax {
public:
  DenseSoftmax(int input_size, int output_size, const std::string &name);

  void initialize(Rng &rng);
  /// Returns B x V probabilities.
  const Mat<S> &forward(const Mat<S> &x);
  /// Probabilities with logits divided by `temperature`.
  Mat<S> predict(const Mat<S> &x, double temperature) const;
  /// Gradient through the softmax from dL/dprobs.
  Mat<S> backward(const Mat<S> &dprobs);
  /// Fused softmax + mean cross-entropy gradient: (p - onehot) / B.
  Mat<S> backward_cross_entropy(std::span<const int> labels);

  std::vector<Param<S> *> params() { return {&w_, &b_}; }

private:
  Mat<S> backward_logits(const Mat<S> &dlogits);

  Param<S> w_, b_;
  const Mat<S> *x_ = nullptr;
  Mat<S> probs_;
};

/// Row-wise softmax, shifted by the row maximum.
template <class S>
Mat<S> softmax_rows(const Mat<S> &logits);

/// Mean of -log(max(p[label], 1e-12)) over rows.
template <class S>
double cross_entropy(const Mat<S> &probs, std::span<const int> labels);

struct AdamConfig {
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-7;
  // Global gradient-norm clip; <= 0 disables.
  double clip_norm = 0.0;
};

template <class S>
class Adam {
public:
  explicit Adam(AdamConfig config = {}) : config_(config) { }

  const AdamConfig &config() const { return config_; }
  long long steps() const { return step_; }

  void step(const std::vector<Param<S> *> &params);

private:
  AdamConfig config_;
  long long step_ = 0;
  std::vector<Mat<S>> m_, v_;
};

extern template class Merge<float>;
extern template class Merge<double>;
extern template class Dropout<float>;
extern template class Dropout<double>;
extern template class DenseSoftmax<float>;
extern template class DenseSoftmax<double>;
extern template class Adam<float>;
extern template class Adam<double>;

}  // namespace smigen::nn

#endif  // SMIGEN_NN_LAYERS_H_
