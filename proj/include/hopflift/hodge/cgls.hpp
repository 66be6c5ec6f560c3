// Copyright 2026 The hopflift Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>

#include "hopflift/fields/operators.hpp"

namespace hopflift {

struct CglsOptions {
  int max_iters = 1000;
  // Stop once |A^T r| <= rel_tol * |A^T b|.
  double rel_tol = 1e-8;
  // SolverDiverged after this many consecutive increases of |r|^2.
  int divergence_window = 10;
};

struct CglsResult {
  Eigen::VectorXd x;
  int iterations = 0;
  double gradient_rel = 0.0;
  double residual_sq = 0.0;
  bool converged = false;
};

// Conjugate gradients on the normal equations of min |A x - b|, started from
// x = 0. Products and dot products use fixed blocks, so the iterates do not
// depend on the worker count. Throws SolverDiverged.
CglsResult cgls(const SparseMatrix& a, const Eigen::VectorXd& b, const CglsOptions& opt);

// Blocked, thread-count independent dot product.
double stable_dot(const Eigen::VectorXd& x, const Eigen::VectorXd& y);

}  // namespace hopflift
