// Copyright 2026 The hopflift Authors
// SPDX-License-Identifier: Apache-2.0

#include "hopflift/approx/approx.hpp"

#include <cmath>
#include <cstdio>

#include "hopflift/fields/mollify.hpp"
#include "hopflift/fields/operators.hpp"
#include "hopflift/fields/quadrature.hpp"
#include "hopflift/hopf/hopf.hpp"
#include "hopflift/pullback/pullback.hpp"

namespace hopflift {

namespace {

double w12_distance(const SphereMapField& a, const SphereMapField& b) {
  const Grid3& grid = a.grid();
  std::vector<double> diff(a.values().begin(), a.values().end());
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= b.values()[i];
  const Partials d = partials(grid, diff, 3);
  const Region ball = Region::ball();
  double s = std::pow(lp_norm(grid, diff, 3, 2.0, ball), 2);
  for (int axis = 0; axis < 3; ++axis) s += std::pow(lp_norm(grid, d.d[axis], 3, 2.0, ball), 2);
  return std::sqrt(s);
}

}  // namespace

ApproxResult approximate(const SphereMapField& u, const VecField& eta, double eps,
                         const LiftConfig& cfg) {
  if (eps < u.grid().h()) {
    throw Error(ErrorCode::WidthTooSmall, "mollifier width " + std::to_string(eps) +
                                              " is below the grid spacing");
  }
  return approximate_with_lift(u, eta, lift(u, eta, cfg), eps);
}

ApproxResult approximate_with_lift(const SphereMapField& u, const VecField& eta,
                                   const LiftResult& lifted, double eps) {
  const Grid3& grid = u.grid();
  require_same_grid(grid, eta.grid());
  require_same_grid(grid, lifted.lift.grid());
  if (eps < grid.h()) {
    throw Error(ErrorCode::WidthTooSmall, "mollifier width " + std::to_string(eps) +
                                              " is below the grid spacing");
  }
  const Region region = mollified_region(eps);
  if (region_volume(grid, region) == 0.0) {
    throw Error(ErrorCode::WidthTooLarge, "no node lies 3*eps = " + std::to_string(3.0 * eps) +
                                              " inside the cube");
  }

  LiftField v = mollify(lifted.lift, eps);
  double min_norm = 1e300;
  for (std::size_t node = 0; node < v.size(); ++node) {
    const auto q = v.at(node);
    const double n = std::sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]);
    min_norm = std::min(min_norm, n);
    if (n > 0.0) v.set(node, {q[0] / n, q[1] / n, q[2] / n, q[3] / n});
  }
  if (!(min_norm >= 0.5)) {
    throw Error(ErrorCode::ProjectionDegenerate,
                "mollified lift has norm " + std::to_string(min_norm) +
                    " < 1/2; eps is too coarse for the phase oscillation");
  }

  SphereMapField u_eps = project(v);
  const VecField zeta = gauge_of_lift(v);
  const VecField remainder = combine(1.0, eta, -1.0, gauge_of_lift(lifted.lift));
  VecField eta_eps = combine(1.0, zeta, 1.0, mollify(remainder, eps));

  Report rep("approx");
  rep.set("eps", eps);
  const Region inner = Region::interior(3.0 * eps + 2.0 * grid.h());
  const VecField defect = combine(1.0, curl(eta_eps), -1.0, pullback_area_form(u_eps));
  rep.set("constraint_residual", l2_norm(defect, inner));
  rep.set("u_distance_w12", w12_distance(u_eps, u));
  rep.set("eta_distance_l2", l2_norm(combine(1.0, eta_eps, -1.0, eta), Region::ball()));
  rep.set("remainder_curl", l2_norm(curl(remainder)));
  rep.set("min_mollified_norm", min_norm);
  rep.set("unit_defect", max_unit_defect(u_eps));
  rep.set("lift_projection_error", lifted.report.projection_error);
  rep.set("lift_gauge_error", lifted.report.gauge_error);
  return {std::move(u_eps), std::move(eta_eps), std::move(v), std::move(rep)};
}

std::vector<SweepRow> convergence_sweep(const SphereMapField& u, const VecField& eta,
                                        const std::vector<double>& eps_list,
                                        const LiftConfig& cfg) {
  if (eps_list.empty()) throw Error(ErrorCode::InvalidArgument, "empty eps list");
  for (std::size_t i = 0; i < eps_list.size(); ++i) {
    if (eps_list[i] < u.grid().h()) {
      throw Error(ErrorCode::WidthTooSmall, "mollifier width " + std::to_string(eps_list[i]) +
                                                " is below the grid spacing");
    }
    if (i > 0 && !(eps_list[i] < eps_list[i - 1])) {
      throw Error(ErrorCode::InvalidArgument, "eps list must be strictly decreasing");
    }
  }
  const LiftResult lifted = lift(u, eta, cfg);
  std::vector<SweepRow> rows;
  for (double eps : eps_list) {
    const ApproxResult r = approximate_with_lift(u, eta, lifted, eps);
    rows.push_back({eps, r.report.metric("u_distance_w12"), r.report.metric("eta_distance_l2"),
                    r.report.metric("constraint_residual")});
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "eps,u_distance_w12,eta_distance_l2,constraint_residual\n";
  char line[160];
  for (const SweepRow& r : rows) {
    std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g\n", r.eps, r.u_distance_w12,
                  r.eta_distance_l2, r.constraint_residual);
    out += line;
  }
  return out;
}

}  // namespace hopflift
