// Copyright 2026 The hopflift Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "hopflift/common/report.hpp"
#include "hopflift/fields/field.hpp"
#include "hopflift/lift/lift.hpp"

namespace hopflift {

struct ApproxResult {
  SphereMapField u;
  VecField eta;
  LiftField lift;
  Report report;
};

// Smooth approximant (u_eps, eta_eps) of (u, eta):
//   u_hat = lift(u, eta), v = mollify(u_hat, eps), u_hat_eps = v / |v|,
//   u_eps = h(u_hat_eps), eta_eps = 2 u_hat_eps^* theta + mollify(eta - 2 u_hat^* theta).
// Report metrics: constraint_residual (L2 of curl eta_eps - D(u_eps) on nodes
// at least 3 eps + 2h from the boundary), u_distance_w12 and eta_distance_l2
// (ball mask), remainder_curl (L2 of curl of the unmollified remainder),
// min_mollified_norm, plus the lift errors.
// Throws WidthTooSmall (eps < h), WidthTooLarge (no node is 3 eps inside),
// ProjectionDegenerate (min |v| < 1/2) and lift errors.
ApproxResult approximate(const SphereMapField& u, const VecField& eta, double eps,
                         const LiftConfig& cfg = {});

// Same with a lift of (u, eta) computed by the caller.
ApproxResult approximate_with_lift(const SphereMapField& u, const VecField& eta,
                                   const LiftResult& lifted, double eps);

struct SweepRow {
  double eps = 0.0;
  double u_distance_w12 = 0.0;
  double eta_distance_l2 = 0.0;
  double constraint_residual = 0.0;
};

// One approximation per eps (strictly decreasing, all >= h), sharing a single
// lift. Throws InvalidArgument for an empty or non-decreasing list.
std::vector<SweepRow> convergence_sweep(const SphereMapField& u, const VecField& eta,
                                        const std::vector<double>& eps_list,
                                        const LiftConfig& cfg = {});

// Header "eps,u_distance_w12,eta_distance_l2,constraint_residual" and one line
// per row, values printed with 17 significant digits.
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace hopflift
