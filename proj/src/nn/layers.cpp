//
// smigen - Copyright 2026 The smigen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "smigen/nn/layers.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace smigen::nn {

template <class S>
Merge<S>::Merge(MergeKind kind, int branches, int width, const std::string &name)
    : kind_(kind), branches_(branches), width_(width) {
  if (branches < 2) throw std::invalid_argument("merge needs at least two branches");
  if (kind_ == MergeKind::kLearnableAverage) {
    logits_.name = name + ".logits";
    logits_.resize(1, branches);
  }
}

template <class S>
int Merge<S>::output_size() const {
  return kind_ == MergeKind::kConcatenate ? branches_ * width_ : width_;
}

template <class S>
Mat<S> Merge<S>::weights() const {
  if (kind_ != MergeKind::kLearnableAverage)
    return Mat<S>::Constant(1, branches_, S(1) / S(branches_));
  return softmax_rows<S>(logits_.value);
}

template <class S>
std::vector<Param<S> *> Merge<S>::params() {
  if (kind_ == MergeKind::kLearnableAverage) return {&logits_};
  return {};
}

template <class S>
const Mat<S> &Merge<S>::forward(const std::vector<const Mat<S> *> &inputs) {
  if (static_cast<int>(inputs.size()) != branches_)
    throw std::invalid_argument("merge: wrong branch count");
  const Eigen::Index rows = inputs.front()->rows();
  for (const Mat<S> *x : inputs)
    if (x->cols() != width_ || x->rows() != rows)
      throw std::invalid_argument("merge: branch width mismatch");
  inputs_ = inputs;

  if (kind_ == MergeKind::kConcatenate) {
    out_.resize(rows, static_cast<Eigen::Index>(branches_) * width_);
    for (int k = 0; k < branches_; ++k)
      out_.middleCols(static_cast<Eigen::Index>(k) * width_, width_) = *inputs[k];
    return out_;
  }
  const Mat<S> alpha = weights();
  out_ = alpha(0, 0) * *inputs[0];
  for (int k = 1; k < branches_; ++k) out_ += alpha(0, k) * *inputs[k];
  return out_;
}

template <class S>
std::vector<Mat<S>> Merge<S>::backward(const Mat<S> &dout) {
  std::vector<Mat<S>> dx(branches_);
  if (kind_ == MergeKind::kConcatenate) {
    for (int k = 0; k < branches_; ++k)
      dx[k] = dout.middleCols(static_cast<Eigen::Index>(k) * width_, width_);
    return dx;
  }
  const Mat<S> alpha = weights();
  for (int k = 0; k < branches_; ++k) dx[k] = alpha(0, k) * dout;
  if (kind_ == MergeKind::kLearnableAverage) {
    Eigen::Matrix<S, 1, Eigen::Dynamic> dalpha(branches_);
    for (int k = 0; k < branches_; ++k)
      dalpha(k) = (dout.array() * inputs_[k]->array()).sum();
    const S mean = (alpha.row(0).array() * dalpha.array()).sum();
    logits_.grad.row(0).array() += alpha.row(0).array() * (dalpha.array() - mean);
  }
  return dx;
}

template <class S>
Dropout<S>::Dropout(double rate) : rate_(rate) {
  if (rate < 0.0 || rate >= 1.0) throw std::invalid_argument("dropout rate in [0,1)");
}

template <class S>
const Mat<S> &Dropout<S>::forward(const Mat<S> &x, bool training, Rng &rng) {
  training_ = training && rate_ > 0.0;
  if (!training_) {
    out_ = x;
    return out_;
  }
  const S keep_scale = S(1.0 / (1.0 - rate_));
  mask_.resize(x.rows(), x.cols());
  for (Eigen::Index i = 0; i < mask_.size(); ++i)
    mask_.data()[i] = rng.uniform() < rate_ ? S(0) : keep_scale;
  out_ = (x.array() * mask_.array()).matrix();
  return out_;
}

template <class S>
Mat<S> Dropout<S>::backward(const Mat<S> &dout) const {
  if (!training_) return dout;
  return (dout.array() * mask_.array()).matrix();
}

template <class S>
Mat<S> softmax_rows(const Mat<S> &logits) {
  Mat<S> p = logits;
  for (Eigen::Index r = 0; r < p.rows(); ++r) {
    auto row = p.row(r);
    row.array() -= row.maxCoeff();
    row = row.array().exp().matrix();
    row /= row.sum();
  }
  return p;
}

template <class S>
double cross_entropy(const Mat<S> &probs, std::span<const int> labels) {
  if (static_cast<std::size_t>(probs.rows()) != labels.size())
    throw std::invalid_argument("cross_entropy: label count mismatch");
  double total = 0.0;
  for (Eigen::Index r = 0; r < probs.rows(); ++r) {
    const double p = static_cast<double>(probs(r, labels[static_cast<std::size_t>(r)]));
    total -= std::log(std::max(p, 1e-12));
  }
  return probs.rows() > 0 ? total / static_cast<double>(probs.rows()) : 0.0;
}

template <class S>
DenseSoftmax<S>::DenseSoftmax(int input_size, int output_size, const std::string &name) {
  if (input_size < 1 || output_size < 1)
    throw std::invalid_argument("dense layer sizes must be positive");
  w_.name = name + ".W";
  b_.name = name + ".b";
  w_.resize(input_size, output_size);
  b_.resize(1, output_size);
}

template <class S>
void DenseSoftmax<S>::initialize(Rng &rng) {
  glorot_uniform<S>(w_.value, rng);
  b_.value.setZero();
}

template <class S>
const Mat<S> &DenseSoftmax<S>::forward(const Mat<S> &x) {
  if (x.cols() != w_.value.rows()) throw std::invalid_argument("dense: shape mismatch");
  x_ = &x;
  Mat<S> logits;
  logits.noalias() = x * w_.value;
  logits.rowwise() += b_.value.row(0);
  probs_ = softmax_rows<S>(logits);
  return probs_;
}

template <class S>
Mat<S> DenseSoftmax<S>::predict(const Mat<S> &x, double temperature) const {
  if (!(temperature > 0.0)) throw std::invalid_argument("temperature must be > 0");
  Mat<S> logits;
  logits.noalias() = x * w_.value;
  logits.rowwise() += b_.value.row(0);
  if (temperature != 1.0) logits /= static_cast<S>(temperature);
  return softmax_rows<S>(logits);
}

template <class S>
Mat<S> DenseSoftmax<S>::backward_logits(const Mat<S> &dlogits) {
  w_.grad.noalias() += x_->transpose() * dlogits;
  b_.grad.row(0) += dlogits.colwise().sum();
  Mat<S> dx;
  dx.noalias() = dlogits * w_.value.transpose();
  return dx;
}

template <class S>
Mat<S> DenseSoftmax<S>::backward(const Mat<S> &dprobs) {
  // dlogit_j = p_j (g_j - sum_k p_k g_k)
  Mat<S> dlogits = probs_;
  for (Eigen::Index r = 0; r < dlogits.rows(); ++r) {
    const S dot = probs_.row(r).dot(dprobs.row(r));
    dlogits.row(r).array() *= dprobs.row(r).array() - dot;
  }
  return backward_logits(dlogits);
}

template <class S>
Mat<S> DenseSoftmax<S>::backward_cross_entropy(std::span<const int> labels) {
  Mat<S> dlogits = probs_;
  for (Eigen::Index r = 0; r < dlogits.rows(); ++r)
    dlogits(r, labels[static_cast<std::size_t>(r)]) -= S(1);
  dlogits /= static_cast<S>(dlogits.rows());
  return backward_logits(dlogits);
}

template <class S>
void Adam<S>::step(const std::vector<Param<S> *> &params) {
  if (m_.empty()) {
    for (const Param<S> *p : params) {
      m_.push_back(Mat<S>::Zero(p->value.rows(), p->value.cols()));
      v_.push_back(Mat<S>::Zero(p->value.rows(), p->value.cols()));
    }
  }
  if (m_.size() != params.size()) throw std::invalid_argument("adam: parameter set changed");

  S scale = S(1);
  if (config_.clip_norm > 0.0) {
    double sq = 0.0;
    for (const Param<S> *p : params) sq += static_cast<double>(p->grad.squaredNorm());
    const double norm = std::sqrt(sq);
    if (norm > config_.clip_norm) scale = static_cast<S>(config_.clip_norm / norm);
  }

  ++step_;
  const double t = static_cast<double>(step_);
  const S b1 = static_cast<S>(config_.beta1), b2 = static_cast<S>(config_.beta2);
  const S lr = static_cast<S>(config_.learning_rate
                              * std::sqrt(1.0 - std::pow(config_.beta2, t))
                              / (1.0 - std::pow(config_.beta1, t)));
  const S eps = static_cast<S>(config_.epsilon);
  for (std::size_t k = 0; k < params.size(); ++k) {
    Param<S> &p = *params[k];
    const auto g = p.grad.array() * scale;
    m_[k].array() = b1 * m_[k].array() + (S(1) - b1) * g;
    v_[k].array() = b2 * v_[k].array() + (S(1) - b2) * g * g;
    p.value.array() -= lr * m_[k].array() / (v_[k].array().sqrt() + eps);
  }
}

template class Merge<float>;
template class Merge<double>;
template class Dropout<float>;
template class Dropout<double>;
template class DenseSoftmax<float>;
template class DenseSoftmax<double>;
template class Adam<float>;
template class Adam<double>;
template Mat<float> softmax_rows<float>(const Mat<float> &);
template Mat<double> softmax_rows<double>(const Mat<double> &);
template double cross_entropy<float>(const Mat<float> &, std::span<const int>);
template double cross_entropy<double>(const Mat<double> &, std::span<const int>);

}  // namespace smigen::nn
