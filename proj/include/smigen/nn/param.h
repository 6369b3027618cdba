//
// smigen - Copyright 2026 The smigen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SMIGEN_NN_PARAM_H_
#define SMIGEN_NN_PARAM_H_

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "smigen/util/random.h"

namespace smigen::nn {

/// Row-major so that the time blocks of a stacked sequence are contiguous.
template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Sequences are stored stacked: T blocks of B rows, time-major. Row
/// t*B + b holds step t of batch item b.
template <class S>
struct Param {
  std::string name;
  Mat<S> value;
  Mat<S> grad;

  void resize(int rows, int cols) {
    value = Mat<S>::Zero(rows, cols);
    grad = Mat<S>::Zero(rows, cols);
  }
};

/// Named dense array used for checkpoints.
struct Tensor {
  std::string name;
  std::vector<std::int64_t> shape;
  std::vector<float> data;
};

template <class S>
Tensor to_tensor(const Param<S> &p) {
  Tensor t;
  t.name = p.name;
  t.shape = {p.value.rows(), p.value.cols()};
  t.data.resize(static_cast<std::size_t>(p.value.size()));
  for (Eigen::Index i = 0; i < p.value.size(); ++i)
    t.data[static_cast<std::size_t>(i)] = static_cast<float>(p.value.data()[i]);
  return t;
}

/// Glorot (Xavier) uniform fill.
template <class S>
void glorot_uniform(Mat<S> &w, Rng &rng) {
  const double limit = std::sqrt(6.0 / static_cast<double>(w.rows() + w.cols()));
  for (Eigen::Index i = 0; i < w.size(); ++i)
    w.data()[i] = static_cast<S>((2.0 * rng.uniform() - 1.0) * limit);
}

/// Fills `w` (rows <= cols) with orthonormal rows.
template <class S>
void orthogonal(Mat<S> &w, Rng &rng);

}  // namespace smigen::nn

#endif  // SMIGEN_NN_PARAM_H_
