// Copyright 2026 The hopflift Authors
// SPDX-License-Identifier: Apache-2.0

#include "hopflift/lift/lift.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "hopflift/common/parallel.hpp"
#include "hopflift/fields/operators.hpp"
#include "hopflift/fields/quadrature.hpp"
#include "hopflift/hodge/cgls.hpp"

namespace hopflift {

namespace {

S2Point unit(double x, double y, double z) {
  const double n = std::sqrt(x * x + y * y + z * z);
  return S2Point{{x / n, y / n, z / n}};
}

// Weighted gradient operator sqrt(W) grad_h with the anchor column removed.
SparseMatrix phase_operator(const Grid3& grid, std::size_t anchor) {
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(grid.size() * 9);
  for (int axis = 0; axis < 3; ++axis) {
    const SparseMatrix d = derivative_matrix(grid, axis);
    for (std::size_t node = 0; node < grid.size(); ++node) {
      const double sw = std::sqrt(grid.weight(node));
      for (SparseMatrix::InnerIterator it(d, static_cast<Eigen::Index>(node)); it; ++it) {
        const auto col = static_cast<std::size_t>(it.col());
        if (col == anchor) continue;
        trip.emplace_back(static_cast<int>(3 * node + axis),
                          static_cast<int>(col > anchor ? col - 1 : col), sw * it.value());
      }
    }
  }
  SparseMatrix m(static_cast<Eigen::Index>(3 * grid.size()),
                 static_cast<Eigen::Index>(grid.size() - 1));
  m.setFromTriplets(trip.begin(), trip.end());
  return m;
}

double interior_max_abs(const ScalarField& f) {
  double worst = 0.0;
  for (std::size_t node = 0; node < f.size(); ++node) {
    if (f.grid().boundary_layer(node) < 1) continue;
    worst = std::max(worst, std::abs(f(node, 0)));
  }
  return worst;
}

}  // namespace

std::vector<S2Point> default_pole_candidates() {
  const double g = std::numbers::phi;
  std::vector<S2Point> out;
  for (double s1 : {1.0, -1.0}) {
    for (double s2 : {1.0, -1.0}) {
      out.push_back(unit(0.0, s1, s2 * g));
      out.push_back(unit(s1, s2 * g, 0.0));
      out.push_back(unit(s2 * g, 0.0, s1));
    }
  }
  for (int axis = 0; axis < 3; ++axis) {
    for (double s : {1.0, -1.0}) {
      Vec3 v{0.0, 0.0, 0.0};
      v[axis] = s;
      out.push_back(S2Point{v});
    }
  }
  return out;
}

double pole_clearance(const SphereMapField& u, const S2Point& pole) {
  // The nearest value maximizes the dot product with the pole.
  double best_dot = -2.0;
  std::size_t best = 0;
  for (std::size_t node = 0; node < u.size(); ++node) {
    const double d = u(node, 0) * pole.x[0] + u(node, 1) * pole.x[1] + u(node, 2) * pole.x[2];
    if (d > best_dot) {
      best_dot = d;
      best = node;
    }
  }
  return angular_distance(u.at(best), pole.x);
}

S2Point select_pole(const SphereMapField& u, const std::vector<S2Point>& candidates,
                    double delta) {
  if (candidates.empty()) throw Error(ErrorCode::InvalidArgument, "no pole candidates");
  double best_distance = -1.0;
  S2Point best = candidates.front();
  for (const S2Point& c : candidates) {
    const double d = pole_clearance(u, c);
    if (d > best_distance) {
      best_distance = d;
      best = c;
    }
  }
  if (best_distance < delta) {
    throw Error(ErrorCode::ChartExhausted,
                "range of u comes within " + std::to_string(best_distance) +
                    " rad of every pole candidate; single-chart lifting unavailable");
  }
  return best;
}

std::size_t anchor_node(const Grid3& grid) {
  std::size_t best = 0;
  double best_r2 = grid.radius_squared(0);
  for (std::size_t node = 1; node < grid.size(); ++node) {
    const double r2 = grid.radius_squared(node);
    if (r2 < best_r2) {
      best_r2 = r2;
      best = node;
    }
  }
  return best;
}

Json LiftReport::to_json() const {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["kind"] = verification_only ? "verify" : "lift";
  if (!verification_only) {
    j["pole_used"] = pole_used.x;
    j["min_pole_distance"] = min_pole_distance;
    j["alpha_closedness"] = alpha_closedness;
    j["phase_anchor"] = phase_anchor;
    j["phase_iterations"] = phase_iterations;
  }
  j["projection_error"] = projection_error;
  j["gauge_error"] = gauge_error;
  j["energy_defect"] = energy_defect;
  return j;
}

LiftResult lift(const SphereMapField& u, const VecField& eta, const LiftConfig& cfg) {
  require_same_grid(u.grid(), eta.grid());
  if (eta.degree() != FormDegree::One) {
    throw Error(ErrorCode::InvalidArgument, "lift expects a 1-form gauge");
  }
  if (!eta.all_finite()) throw Error(ErrorCode::InvalidArgument, "gauge is not finite");
  const Grid3& grid = u.grid();
  const double h = grid.h();

  const S2Point pole = select_pole(u, cfg.candidates, cfg.pole_delta);
  const StereoSection section(pole, cfg.pole_delta);
  LiftField s(grid);
  parallel_for(0, grid.size(), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t node = lo; node < hi; ++node) s.set(node, section(S2Point{u.at(node)}).x);
  });

  const VecField section_gauge = gauge_of_lift(s);
  const VecField alpha = combine(0.5, eta, -0.5, section_gauge);
  const double alpha_norm = l2_norm(alpha);
  const double curl_norm = l2_norm(curl(alpha));
  // Scale by the pulled-back area form too, so a nearly exact section does not blow up the ratio.
  const double scale = std::max(alpha_norm, 0.5 * l2_norm(curl(section_gauge)));
  const double closedness = scale < 1e-12 ? curl_norm : curl_norm / scale;
  const double closed_tol = cfg.closed_tol.value_or(50.0 * h * h);
  if (!(closedness <= closed_tol)) {
    throw Error(ErrorCode::NotClosed, "phase 1-form is not closed: relative |curl a| = " +
                                          std::to_string(closedness) + " exceeds " +
                                          std::to_string(closed_tol));
  }

  const std::size_t anchor = anchor_node(grid);
  ScalarField phase(grid);
  int iterations = 0;
  if (alpha_norm > 0.0) {
    Eigen::VectorXd rhs(static_cast<Eigen::Index>(3 * grid.size()));
    for (std::size_t node = 0; node < grid.size(); ++node) {
      const double sw = std::sqrt(grid.weight(node));
      for (int c = 0; c < 3; ++c) rhs[static_cast<Eigen::Index>(3 * node + c)] = sw * alpha(node, c);
    }
    const CglsResult sol =
        cgls(phase_operator(grid, anchor), rhs, {cfg.max_iters.value_or(50 * grid.n()), cfg.rel_tol, 10});
    if (!sol.converged) {
      throw Error(ErrorCode::NotConverged, "phase solve stopped after " +
                                               std::to_string(sol.iterations) +
                                               " iterations at relative gradient " +
                                               std::to_string(sol.gradient_rel));
    }
    iterations = sol.iterations;
    for (std::size_t node = 0; node < grid.size(); ++node) {
      if (node == anchor) continue;
      phase(node, 0) = sol.x[static_cast<Eigen::Index>(node > anchor ? node - 1 : node)];
    }
  }

  LiftField uhat = rotate_phase(s, phase);
  LiftReport rep = verify_lift(u, eta, uhat);
  rep.verification_only = false;
  rep.pole_used = pole;
  rep.min_pole_distance = pole_clearance(u, pole);
  rep.alpha_closedness = closedness;
  rep.phase_anchor = anchor;
  rep.phase_iterations = iterations;
  return {std::move(uhat), rep};
}

LiftReport verify_lift(const SphereMapField& u, const VecField& eta, const LiftField& uhat) {
  require_same_grid(u.grid(), uhat.grid());
  require_same_grid(u.grid(), eta.grid());
  LiftReport rep;
  rep.verification_only = true;
  const SphereMapField projected = project(uhat);
  for (std::size_t node = 0; node < u.size(); ++node) {
    double d = 0.0;
    for (int c = 0; c < 3; ++c) d += std::pow(projected(node, c) - u(node, c), 2);
    rep.projection_error = std::max(rep.projection_error, std::sqrt(d));
  }
  const VecField gauge = gauge_of_lift(uhat);
  const double eta_norm = l2_norm(eta);
  const double diff = l2_norm(combine(1.0, gauge, -1.0, eta));
  rep.gauge_error = eta_norm < 1e-12 ? diff : diff / eta_norm;
  rep.energy_defect = interior_max_abs(energy_identity_defect(uhat, u, eta));
  rep.phase_anchor = anchor_node(u.grid());
  return rep;
}

double phase_spread(const LiftField& a, const LiftField& b) {
  require_same_grid(a.grid(), b.grid());
  std::vector<double> phase(a.size());
  std::complex<double> mean(0.0, 0.0);
  for (std::size_t node = 0; node < a.size(); ++node) {
    const auto p = a.at(node), q = b.at(node);
    const std::complex<double> z(p[0], -p[1]), w(p[2], -p[3]);
    const std::complex<double> inner = z * std::complex<double>(q[0], q[1]) +
                                       w * std::complex<double>(q[2], q[3]);
    phase[node] = std::arg(inner);
    mean += std::polar(1.0, phase[node]);
  }
  const double centre = std::arg(mean);
  double s = 0.0;
  for (double p : phase) {
    const double d = std::remainder(p - centre, 2.0 * std::numbers::pi);
    s += d * d;
  }
  return std::sqrt(s / static_cast<double>(phase.size()));
}

}  // namespace hopflift
