//
// smigen - Copyright 2026 The smigen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "smigen/nn/recurrent.h"

#include <stdexcept>

#include <Eigen/QR>

namespace smigen::nn {

template <class S>
void orthogonal(Mat<S> &w, Rng &rng) {
  using Dense = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic>;
  const Eigen::Index rows = w.rows(), cols = w.cols();
  if (rows > cols) throw std::invalid_argument("orthogonal: rows > cols");
  Dense a(cols, rows);
  for (Eigen::Index i = 0; i < a.size(); ++i) a.data()[i] = rng.normal();
  Eigen::HouseholderQR<Dense> qr(a);
  Dense q = qr.householderQ() * Dense::Identity(cols, rows);
  const Dense r = qr.matrixQR().topRows(rows).template triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < rows; ++j)
    if (r(j, j) < 0) q.col(j) *= -1.0;
  w = q.transpose().template cast<S>();
}

template void orthogonal<float>(Mat<float> &, Rng &);
template void orthogonal<double>(Mat<double> &, Rng &);

namespace {

template <class Derived>
auto sigmoid(const Eigen::ArrayBase<Derived> &x) {
  using S = typename Derived::Scalar;
  return S(1) / (S(1) + (-x).exp());
}

}  // namespace

template <class S>
RecurrentLayer<S>::RecurrentLayer(CellKind kind, int input_size, int hidden_size,
                                  bool reverse, const std::string &name)
    : kind_(kind), input_(input_size), hidden_(hidden_size), reverse_(reverse) {
  if (input_size < 1 || hidden_size < 1)
    throw std::invalid_argument("recurrent layer sizes must be positive");
  const int g = gates() * hidden_;
  wx_.name = name + ".Wx";
  wh_.name = name + ".Wh";
  b_.name = name + ".b";
  wx_.resize(input_, g);
  wh_.resize(hidden_, g);
  b_.resize(1, g);
  if (kind_ == CellKind::kGru) {
    bh_.name = name + ".bh";
    bh_.resize(1, g);
  }
}

template <class S>
void RecurrentLayer<S>::initialize(Rng &rng) {
  glorot_uniform<S>(wx_.value, rng);
  orthogonal<S>(wh_.value, rng);
  b_.value.setZero();
  if (kind_ == CellKind::kLstm) b_.value.middleCols(hidden_, hidden_).setOnes();
  if (kind_ == CellKind::kGru) bh_.value.setZero();
}

template <class S>
std::vector<Param<S> *> RecurrentLayer<S>::params() {
  if (kind_ == CellKind::kGru) return {&wx_, &wh_, &b_, &bh_};
  return {&wx_, &wh_, &b_};
}

template <class S>
const Mat<S> &RecurrentLayer<S>::forward(const Mat<S> &x, int steps) {
  if (steps < 1 || x.rows() % steps != 0 || x.cols() != input_)
    throw std::invalid_argument("recurrent forward: shape mismatch");
  steps_ = steps;
  batch_ = static_cast<int>(x.rows() / steps);
  x_ = &x;
  tokens_.clear();
  act_.noalias() = x * wx_.value;
  act_.rowwise() += b_.value.row(0);
  return recur();
}

template <class S>
const Mat<S> &RecurrentLayer<S>::forward_tokens(std::span<const int> tokens, int steps) {
  if (steps < 1 || tokens.size() % static_cast<std::size_t>(steps) != 0)
    throw std::invalid_argument("recurrent forward: shape mismatch");
  steps_ = steps;
  batch_ = static_cast<int>(tokens.size() / static_cast<std::size_t>(steps));
  x_ = nullptr;
  tokens_.assign(tokens.begin(), tokens.end());
  act_.resize(static_cast<Eigen::Index>(tokens.size()), wx_.value.cols());
  for (std::size_t r = 0; r < tokens.size(); ++r) {
    if (tokens[r] < 0 || tokens[r] >= input_)
      throw std::invalid_argument("recurrent forward: token out of range");
    act_.row(static_cast<Eigen::Index>(r)) = wx_.value.row(tokens[r]) + b_.value.row(0);
  }
  return recur();
}

template <class S>
const Mat<S> &RecurrentLayer<S>::recur() {
  const int T = steps_, B = batch_, H = hidden_;
  out_.resize(static_cast<Eigen::Index>(T) * B, H);
  if (kind_ == CellKind::kLstm) {
    cell_.resize(static_cast<Eigen::Index>(T) * B, H);
  } else {
    hrec_.resize(static_cast<Eigen::Index>(T) * B, H);
  }
  Mat<S> hr(B, 3 * H);

  for (int s = 0; s < T; ++s) {
    const int t = reverse_ ? T - 1 - s : s;
    const int p = reverse_ ? t + 1 : t - 1;
    auto a = act_.middleRows(static_cast<Eigen::Index>(t) * B, B);
    auto h = out_.middleRows(static_cast<Eigen::Index>(t) * B, B);

    if (kind_ == CellKind::kLstm) {
      if (s > 0) a.noalias() += out_.middleRows(static_cast<Eigen::Index>(p) * B, B) * wh_.value;
      a.leftCols(2 * H) = sigmoid(a.leftCols(2 * H).array()).matrix();
      a.middleCols(2 * H, H) = a.middleCols(2 * H, H).array().tanh().matrix();
      a.rightCols(H) = sigmoid(a.rightCols(H).array()).matrix();
      auto c = cell_.middleRows(static_cast<Eigen::Index>(t) * B, B);
      c = (a.leftCols(H).array() * a.middleCols(2 * H, H).array()).matrix();
      if (s > 0)
        c.array() += a.middleCols(H, H).array()
                     * cell_.middleRows(static_cast<Eigen::Index>(p) * B, B).array();
      h = (a.rightCols(H).array() * c.array().tanh()).matrix();
    } else {
      if (s > 0) {
        hr.noalias() = out_.middleRows(static_cast<Eigen::Index>(p) * B, B) * wh_.value;
        hr.rowwise() += bh_.value.row(0);
      } else {
        hr.rowwise() = bh_.value.row(0);
      }
      a.leftCols(2 * H) =
          sigmoid((a.leftCols(2 * H) + hr.leftCols(2 * H)).array()).matrix();
      hrec_.middleRows(static_cast<Eigen::Index>(t) * B, B) = hr.rightCols(H);
      a.rightCols(H) =
          (a.rightCols(H).array() + a.middleCols(H, H).array() * hr.rightCols(H).array())
              .tanh()
              .matrix();
      // h = z*h_prev + (1-z)*n
      h = ((S(1) - a.leftCols(H).array()) * a.rightCols(H).array()).matrix();
      if (s > 0)
        h.array() += a.leftCols(H).array()
                     * out_.middleRows(static_cast<Eigen::Index>(p) * B, B).array();
    }
  }
  return out_;
}

template <class S>
Mat<S> RecurrentLayer<S>::backward(const Mat<S> &dout) {
  const int T = steps_, B = batch_, H = hidden_, G = gates() * hidden_;
  if (dout.rows() != out_.rows() || dout.cols() != H)
    throw std::invalid_argument("recurrent backward: shape mismatch");

  Mat<S> dact(static_cast<Eigen::Index>(T) * B, G);
  Mat<S> dh_carry = Mat<S>::Zero(B, H);
  Mat<S> dc_carry = Mat<S>::Zero(B, H);
  Mat<S> dh(B, H), dc(B, H), dhr(B, G);

  for (int s = T - 1; s >= 0; --s) {
    const int t = reverse_ ? T - 1 - s : s;
    const int p = reverse_ ? t + 1 : t - 1;
    const Eigen::Index r0 = static_cast<Eigen::Index>(t) * B;
    const Eigen::Index rp = static_cast<Eigen::Index>(p) * B;
    const auto a = act_.middleRows(r0, B);
    auto da = dact.middleRows(r0, B);
    dh = dout.middleRows(r0, B) + dh_carry;

    if (kind_ == CellKind::kLstm) {
      const auto i = a.leftCols(H).array();
      const auto f = a.middleCols(H, H).array();
      const auto g = a.middleCols(2 * H, H).array();
      const auto o = a.rightCols(H).array();
      const auto tc = cell_.middleRows(r0, B).array().tanh();
      dc = (dc_carry.array() + dh.array() * o * (S(1) - tc * tc)).matrix();
      da.rightCols(H) = (dh.array() * tc * o * (S(1) - o)).matrix();
      da.leftCols(H) = (dc.array() * g * i * (S(1) - i)).matrix();
      da.middleCols(2 * H, H) = (dc.array() * i * (S(1) - g * g)).matrix();
      if (s > 0) {
        da.middleCols(H, H) =
            (dc.array() * cell_.middleRows(rp, B).array() * f * (S(1) - f)).matrix();
        dc_carry = (dc.array() * f).matrix();
        wh_.grad.noalias() += out_.middleRows(rp, B).transpose() * da;
        dh_carry.noalias() = da * wh_.value.transpose();
      } else {
        da.middleCols(H, H).setZero();
      }
    } else {
      const auto z = a.leftCols(H).array();
      const auto r = a.middleCols(H, H).array();
      const auto n = a.rightCols(H).array();
      const auto hn = hrec_.middleRows(r0, B).array();
      // dn before tanh
      const Mat<S> dn = (dh.array() * (S(1) - z) * (S(1) - n * n)).matrix();
      Mat<S> dz;
      if (s > 0)
        dz = (dh.array() * (out_.middleRows(rp, B).array() - n)).matrix();
      else
        dz = (-dh.array() * n).matrix();
      da.leftCols(H) = (dz.array() * z * (S(1) - z)).matrix();
      da.middleCols(H, H) = (dn.array() * hn * r * (S(1) - r)).matrix();
      da.rightCols(H) = dn;
      dhr.leftCols(2 * H) = da.leftCols(2 * H);
      dhr.rightCols(H) = (dn.array() * r).matrix();
      bh_.grad.row(0) += dhr.colwise().sum();
      if (s > 0) {
        wh_.grad.noalias() += out_.middleRows(rp, B).transpose() * dhr;
        dh_carry = (dh.array() * z).matrix();
        dh_carry.noalias() += dhr * wh_.value.transpose();
      }
    }
  }

  b_.grad.row(0) += dact.colwise().sum();
  if (x_ == nullptr) {
    for (std::size_t row = 0; row < tokens_.size(); ++row)
      wx_.grad.row(tokens_[row]) += dact.row(static_cast<Eigen::Index>(row));
    return {};
  }
  wx_.grad.noalias() += x_->transpose() * dact;
  Mat<S> dx;
  dx.noalias() = dact * wx_.value.transpose();
  return dx;
}

template <class S>
RecurrentBlock<S>::RecurrentBlock(CellKind kind, int input_size, int hidden_size,
                                  bool bidirectional, bool return_sequences,
                                  const std::string &name)
    : return_sequences_(return_sequences) {
  layers_.emplace_back(kind, input_size, hidden_size, false,
                       bidirectional ? name + ".fwd" : name);
  if (bidirectional) layers_.emplace_back(kind, input_size, hidden_size, true, name + ".bwd");
}

template <class S>
int RecurrentBlock<S>::output_size() const {
  return static_cast<int>(layers_.size()) * layers_.front().hidden_size();
}

template <class S>
void RecurrentBlock<S>::initialize(Rng &rng) {
  for (auto &layer : layers_) layer.initialize(rng);
}

template <class S>
std::vector<Param<S> *> RecurrentBlock<S>::params() {
  std::vector<Param<S> *> out;
  for (auto &layer : layers_)
    for (Param<S> *p : layer.params()) out.push_back(p);
  return out;
}

template <class S>
const Mat<S> &RecurrentBlock<S>::forward(const Mat<S> &x, int steps) {
  for (auto &layer : layers_) layer.forward(x, steps);
  gather(steps);
  return out_;
}

template <class S>
const Mat<S> &RecurrentBlock<S>::forward_tokens(std::span<const int> tokens, int steps) {
  for (auto &layer : layers_) layer.forward_tokens(tokens, steps);
  gather(steps);
  return out_;
}

template <class S>
void RecurrentBlock<S>::gather(int steps) {
  steps_ = steps;
  const Mat<S> &fwd = layers_.front().output();
  const Eigen::Index H = fwd.cols();
  const Eigen::Index B = fwd.rows() / steps;
  if (return_sequences_) {
    if (layers_.size() == 1) {
      out_ = fwd;
      return;
    }
    out_.resize(fwd.rows(), 2 * H);
    out_.leftCols(H) = fwd;
    out_.rightCols(H) = layers_.back().output();
    return;
  }
  out_.resize(B, static_cast<Eigen::Index>(layers_.size()) * H);
  out_.leftCols(H) = fwd.bottomRows(B);
  if (layers_.size() == 2) out_.rightCols(H) = layers_.back().output().topRows(B);
}

template <class S>
Mat<S> RecurrentBlock<S>::backward(const Mat<S> &dout) {
  const Mat<S> &fwd = layers_.front().output();
  const Eigen::Index H = fwd.cols();
  const Eigen::Index B = fwd.rows() / steps_;
  Mat<S> dx;
  for (std::size_t k = 0; k < layers_.size(); ++k) {
    const Eigen::Index col = static_cast<Eigen::Index>(k) * H;
    Mat<S> d;
    if (return_sequences_) {
      d = dout.middleCols(col, H);
    } else {
      d = Mat<S>::Zero(fwd.rows(), H);
      if (k == 0)
        d.bottomRows(B) = dout.middleCols(col, H);
      else
        d.topRows(B) = dout.middleCols(col, H);
    }
    Mat<S> part = layers_[k].backward(d);
    if (k == 0)
      dx = std::move(part);
    else if (part.size() > 0)
      dx += part;
  }
  return dx;
}

template class RecurrentLayer<float>;
template class RecurrentLayer<double>;
template class RecurrentBlock<float>;
template class RecurrentBlock<double>;

}  // namespace smigen::nn
