//
// smigen - Copyright 2026 The smigen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "gradcheck.h"

#include <algorithm>
#include <cmath>

namespace smigen::testing {
namespace {

DMat numeric(DMat &target, const std::function<double()> &loss, double eps) {
  DMat g(target.rows(), target.cols());
  for (Eigen::Index i = 0; i < target.size(); ++i) {
    double &v = target.data()[i];
    const double saved = v;
    v = saved + eps;
    const double up = loss();
    v = saved - eps;
    const double down = loss();
    v = saved;
    g.data()[i] = (up - down) / (2.0 * eps);
  }
  return g;
}

double rel(const DMat &a, const DMat &n) {
  const double denom = std::max(a.norm() + n.norm(), 1e-12);
  return (a - n).norm() / denom;
}

}  // namespace

std::vector<GradReport> check_gradients(GradProblem &problem, double eps) {
  for (auto *p : problem.params) p->grad.setZero();
  const std::vector<DMat> input_grads = problem.analytic();
  std::vector<DMat> param_grads;
  for (auto *p : problem.params) param_grads.push_back(p->grad);

  std::vector<GradReport> out;
  for (std::size_t k = 0; k < problem.params.size(); ++k) {
    auto *p = problem.params[k];
    out.push_back({p->name, rel(param_grads[k], numeric(p->value, problem.loss, eps))});
  }
  for (std::size_t k = 0; k < problem.inputs.size(); ++k) {
    out.push_back({"input" + std::to_string(k),
                   rel(input_grads[k], numeric(*problem.inputs[k], problem.loss, eps))});
  }
  return out;
}

double max_error(const std::vector<GradReport> &reports) {
  double m = 0.0;
  for (const auto &r : reports) m = std::max(m, r.rel_error);
  return m;
}

}  // namespace smigen::testing
