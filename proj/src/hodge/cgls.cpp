// Copyright 2026 The hopflift Authors
// SPDX-License-Identifier: Apache-2.0

#include "hopflift/hodge/cgls.hpp"

#include <cmath>
#include <vector>

#include "hopflift/common/error.hpp"
#include "hopflift/common/parallel.hpp"

namespace hopflift {

namespace {

constexpr Eigen::Index kBlock = 4096;

void multiply(const SparseMatrix& m, const Eigen::VectorXd& x, Eigen::VectorXd& y) {
  y.resize(m.rows());
  parallel_for(0, static_cast<std::size_t>(m.rows()), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t row = lo; row < hi; ++row) {
      double s = 0.0;
      for (SparseMatrix::InnerIterator it(m, static_cast<Eigen::Index>(row)); it; ++it) {
        s += it.value() * x[it.col()];
      }
      y[static_cast<Eigen::Index>(row)] = s;
    }
  });
}

}  // namespace

double stable_dot(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  const Eigen::Index size = x.size();
  const std::size_t blocks = static_cast<std::size_t>((size + kBlock - 1) / kBlock);
  std::vector<double> partial(blocks, 0.0);
  parallel_for(0, blocks, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t b = lo; b < hi; ++b) {
      const Eigen::Index start = static_cast<Eigen::Index>(b) * kBlock;
      const Eigen::Index len = std::min(kBlock, size - start);
      partial[b] = x.segment(start, len).dot(y.segment(start, len));
    }
  });
  double s = 0.0;
  for (double p : partial) s += p;
  return s;
}

CglsResult cgls(const SparseMatrix& a, const Eigen::VectorXd& b, const CglsOptions& opt) {
  const SparseMatrix at = a.transpose();
  CglsResult out;
  out.x = Eigen::VectorXd::Zero(a.cols());
  Eigen::VectorXd r = b;
  Eigen::VectorXd s, q;
  multiply(at, r, s);
  const double s0 = std::sqrt(stable_dot(s, s));
  out.residual_sq = stable_dot(r, r);
  if (s0 == 0.0) {
    out.converged = true;
    return out;
  }
  Eigen::VectorXd p = s;
  double gamma = s0 * s0;
  double prev_res = out.residual_sq;
  int increases = 0;
  for (int it = 1; it <= opt.max_iters; ++it) {
    multiply(a, p, q);
    const double qq = stable_dot(q, q);
    if (!(qq > 0.0) || !std::isfinite(qq)) {
      throw Error(ErrorCode::SolverDiverged, "search direction lost (|Ap|^2 = " +
                                                 std::to_string(qq) + ")");
    }
    const double alpha = gamma / qq;
    out.x += alpha * p;
    r -= alpha * q;
    multiply(at, r, s);
    const double gamma_new = stable_dot(s, s);
    out.iterations = it;
    out.residual_sq = stable_dot(r, r);
    out.gradient_rel = std::sqrt(gamma_new) / s0;
    if (!std::isfinite(out.residual_sq)) {
      throw Error(ErrorCode::SolverDiverged, "residual is not finite");
    }
    increases = out.residual_sq > prev_res ? increases + 1 : 0;
    if (increases >= opt.divergence_window) {
      throw Error(ErrorCode::SolverDiverged,
                  "residual increased over " + std::to_string(increases) + " iterations");
    }
    prev_res = out.residual_sq;
    if (out.gradient_rel <= opt.rel_tol) {
      out.converged = true;
      return out;
    }
    p = s + (gamma_new / gamma) * p;
    gamma = gamma_new;
  }
  return out;
}

}  // namespace hopflift
