//
// smigen - Copyright 2026 The smigen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "gradcases.h"

#include <sstream>
#include <vector>

#include "gradcheck.h"
#include "smigen/model/generator.h"
#include "smigen/util/random.h"

namespace smigen::testing {
namespace {

int draw(Rng &rng, int lo, int hi) { return lo + static_cast<int>(rng.below(hi - lo + 1)); }

DMat random_matrix(Rng &rng, Eigen::Index rows, Eigen::Index cols) {
  DMat m(rows, cols);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = rng.normal();
  return m;
}

// Moves parameters away from their structured initial values (zero
// biases, orthogonal matrices) so every path carries gradient.
void jitter(const std::vector<nn::Param<double> *> &params, Rng &rng, double scale) {
  for (auto *p : params)
    for (Eigen::Index i = 0; i < p->value.size(); ++i) p->value.data()[i] += scale * rng.normal();
}

}  // namespace

CaseResult check_recurrent(nn::CellKind kind, bool bidirectional, bool return_sequences,
                           std::uint64_t seed) {
  Rng rng(seed);
  const int T = draw(rng, 1, 5), B = draw(rng, 1, 4), I = draw(rng, 1, 6), H = draw(rng, 1, 5);
  nn::RecurrentBlock<double> block(kind, I, H, bidirectional, return_sequences, "rnn");
  block.initialize(rng);
  jitter(block.params(), rng, 0.3);
  DMat x = random_matrix(rng, T * B, I);
  const DMat w = random_matrix(rng, return_sequences ? T * B : B, block.output_size());

  GradProblem problem;
  problem.params = block.params();
  problem.inputs = {&x};
  problem.loss = [&] { return (block.forward(x, T).array() * w.array()).sum(); };
  problem.analytic = [&] {
    block.forward(x, T);
    return std::vector<DMat>{block.backward(w)};
  };
  std::ostringstream shape;
  shape << "T=" << T << " B=" << B << " I=" << I << " H=" << H;
  return {shape.str(), max_error(check_gradients(problem))};
}

CaseResult check_merge(nn::MergeKind kind, std::uint64_t seed) {
  Rng rng(seed);
  const int k = draw(rng, 2, 5), B = draw(rng, 1, 4), W = draw(rng, 1, 6);
  nn::Merge<double> merge(kind, k, W, "merge");
  jitter(merge.params(), rng, 0.5);
  std::vector<DMat> branches;
  for (int i = 0; i < k; ++i) branches.push_back(random_matrix(rng, B, W));
  const DMat w = random_matrix(rng, B, merge.output_size());

  auto forward = [&]() -> const nn::Mat<double> & {
    std::vector<const nn::Mat<double> *> in;
    for (const auto &b : branches) in.push_back(&b);
    return merge.forward(in);
  };
  GradProblem problem;
  problem.params = merge.params();
  for (auto &b : branches) problem.inputs.push_back(&b);
  problem.loss = [&] { return (forward().array() * w.array()).sum(); };
  problem.analytic = [&] {
    forward();
    return merge.backward(w);
  };
  std::ostringstream shape;
  shape << "k=" << k << " B=" << B << " W=" << W;
  return {shape.str(), max_error(check_gradients(problem))};
}

CaseResult check_dense_softmax(std::uint64_t seed) {
  Rng rng(seed);
  const int B = draw(rng, 1, 6), I = draw(rng, 1, 8), V = draw(rng, 2, 9);
  nn::DenseSoftmax<double> dense(I, V, "dense");
  dense.initialize(rng);
  jitter(dense.params(), rng, 0.5);
  DMat x = random_matrix(rng, B, I);
  std::vector<int> labels(B);
  for (int &l : labels) l = static_cast<int>(rng.below(V));

  GradProblem problem;
  problem.params = dense.params();
  problem.inputs = {&x};
  problem.loss = [&] { return nn::cross_entropy(dense.forward(x), labels); };
  problem.analytic = [&] {
    dense.forward(x);
    return std::vector<DMat>{dense.backward_cross_entropy(labels)};
  };
  std::ostringstream shape;
  shape << "B=" << B << " I=" << I << " V=" << V;
  return {shape.str(), max_error(check_gradients(problem))};
}

CaseResult check_generator(const model::ArchitectureSpec &spec, std::uint64_t seed) {
  Rng rng(seed);
  const int T = draw(rng, 1, 4), B = draw(rng, 1, 3), V = draw(rng, 4, 7);
  model::Generator<double> gen(spec, V);
  gen.initialize(seed);
  jitter(gen.params(), rng, 0.2);
  std::vector<int> tokens(static_cast<std::size_t>(T * B)), labels(B);
  for (int &t : tokens) t = static_cast<int>(rng.below(V));
  for (int &l : labels) l = static_cast<int>(rng.below(V));
  const std::uint64_t mask_seed = rng.next();

  GradProblem problem;
  problem.params = gen.params();
  problem.loss = [&] {
    Rng mask(mask_seed);
    return nn::cross_entropy(gen.forward(tokens, T, true, mask), labels);
  };
  problem.analytic = [&] {
    Rng mask(mask_seed);
    gen.forward(tokens, T, true, mask);
    gen.backward(labels);
    return std::vector<DMat>{};
  };
  std::ostringstream shape;
  shape << "T=" << T << " B=" << B << " V=" << V;
  return {shape.str(), max_error(check_gradients(problem))};
}

}  // namespace smigen::testing
