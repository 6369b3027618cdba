//
// smigen - Copyright 2026 The smigen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SMIGEN_NN_RECURRENT_H_
#define SMIGEN_NN_RECURRENT_H_

#include <span>
#include <string>
#include <vector>

#include "smigen/nn/param.h"

namespace smigen::nn {

enum class CellKind { kLstm, kGru };

/// One recurrent direction. LSTM gates are laid out i|f|g|o; GRU gates
/// z|r|n with the reset gate applied after the recurrent product and
/// separate input and recurrent biases. Initial state is zero.
template <class S>
class RecurrentLayer {
public:
  RecurrentLayer(CellKind kind, int input_size, int hidden_size, bool reverse,
                 const std::string &name);

  CellKind kind() const { return kind_; }
  int input_size() const { return input_; }
  int hidden_size() const { return hidden_; }
  bool reverse() const { return reverse_; }

  /// Glorot input kernel, orthogonal recurrent kernel, zero biases with
  /// the LSTM forget bias at 1.
  void initialize(Rng &rng);

  /// x is (T*B) x input. Returns (T*B) x hidden, outputs in input time
  /// order. The input must stay alive until backward().
  const Mat<S> &forward(const Mat<S> &x, int steps);

  /// Same, with x given as token ids (one-hot rows).
  const Mat<S> &forward_tokens(std::span<const int> tokens, int steps);

  /// dout is (T*B) x hidden. Accumulates parameter gradients and returns
  /// the input gradient (empty after forward_tokens).
  Mat<S> backward(const Mat<S> &dout);

  std::vector<Param<S> *> params();
  const Mat<S> &output() const { return out_; }

private:
  int gates() const { return kind_ == CellKind::kLstm ? 4 : 3; }
  const Mat<S> &recur();

  CellKind kind_;
  int input_;
  int hidden_;
  bool reverse_;
  Param<S> wx_, wh_, b_, bh_;  // bh_ only for GRU

  int steps_ = 0;
  int batch_ = 0;
  const Mat<S> *x_ = nullptr;
  std::vector<int> tokens_;
  Mat<S> act_;    // (T*B) x G*H; activated gates
  Mat<S> cell_;   // LSTM cell state
  Mat<S> hrec_;   // GRU: h_prev * Wh_n + bh_n, needed for the reset gate
  Mat<S> out_;
};

/// One or two directions, optionally reduced to the final state. With both
/// directions the outputs are concatenated [forward | backward]; the final
/// state of the backward direction is the one at time 0.
template <class S>
class RecurrentBlock {
public:
  RecurrentBlock(CellKind kind, int input_size, int hidden_size, bool bidirectional,
                 bool return_sequences, const std::string &name);

  int output_size() const;
  bool bidirectional() const { return layers_.size() == 2; }

  void initialize(Rng &rng);

  /// Returns (T*B) x out with return_sequences, else B x out.
  const Mat<S> &forward(const Mat<S> &x, int steps);
  const Mat<S> &forward_tokens(std::span<const int> tokens, int steps);
  Mat<S> backward(const Mat<S> &dout);
  const Mat<S> &output() const { return out_; }

  std::vector<Param<S> *> params();

private:
  void gather(int steps);

  std::vector<RecurrentLayer<S>> layers_;
  bool return_sequences_;
  int steps_ = 0;
  Mat<S> out_;
};

extern template class RecurrentLayer<float>;
extern template class RecurrentLayer<double>;
extern template class RecurrentBlock<float>;
extern template class RecurrentBlock<double>;

}  // namespace smigen::nn

#endif  // SMIGEN_NN_RECURRENT_H_
