// Copyright 2026 The hopflift Authors
// SPDX-License-Identifier: Apache-2.0

#include "hopflift/hodge/gauge.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "hopflift/fields/operators.hpp"
#include "hopflift/fields/quadrature.hpp"
#include "hopflift/hodge/cgls.hpp"

namespace hopflift {

namespace {

using Triplet = Eigen::Triplet<double>;
using ScalarFn = std::function<double(double, double, double)>;

double face_weight(const Grid3& grid, std::size_t node, int axis) {
  const auto ijk = grid.ijk(node);
  const int last = grid.n() - 1;
  double w = grid.h() * grid.h();
  for (int t = 0; t < 3; ++t) {
    if (t != axis && (ijk[t] == 0 || ijk[t] == last)) w *= 0.5;
  }
  return w;
}

// Rows: sqrt(W) curl, sqrt(mu_d W) div, sqrt(mu_b w_face) a.n.
SparseMatrix gauge_operator(const Grid3& grid, double div_penalty, double boundary_penalty) {
  const std::size_t nodes = grid.size();
  const SparseMatrix d[3] = {derivative_matrix(grid, 0), derivative_matrix(grid, 1),
                             derivative_matrix(grid, 2)};
  std::vector<Triplet> trip;
  trip.reserve(nodes * 24);
  auto add_partial = [&](std::size_t row, std::size_t node, int axis, int comp, double scale) {
    for (SparseMatrix::InnerIterator it(d[axis], static_cast<Eigen::Index>(node)); it; ++it) {
      trip.emplace_back(static_cast<int>(row), static_cast<int>(it.col() * 3 + comp),
                        scale * it.value());
    }
  };
  for (std::size_t node = 0; node < nodes; ++node) {
    const double sw = std::sqrt(grid.weight(node));
    for (int c = 0; c < 3; ++c) {
      const int j = (c + 1) % 3, l = (c + 2) % 3;
      add_partial(3 * node + c, node, j, l, sw);
      add_partial(3 * node + c, node, l, j, -sw);
    }
    const double sd = std::sqrt(div_penalty * grid.weight(node));
    for (int c = 0; c < 3; ++c) add_partial(3 * nodes + node, node, c, c, sd);
  }
  std::size_t row = 4 * nodes;
  const int last = grid.n() - 1;
  for (std::size_t node = 0; node < nodes; ++node) {
    const auto ijk = grid.ijk(node);
    for (int axis = 0; axis < 3; ++axis) {
      if (ijk[axis] != 0 && ijk[axis] != last) continue;
      const double sign = ijk[axis] == 0 ? -1.0 : 1.0;
      trip.emplace_back(static_cast<int>(row++), static_cast<int>(3 * node + axis),
                        sign * std::sqrt(boundary_penalty * face_weight(grid, node, axis)));
    }
  }
  SparseMatrix m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(3 * nodes));
  m.setFromTriplets(trip.begin(), trip.end());
  return m;
}

VecField sample_gradient(const Grid3& grid, const ScalarFn& psi) {
  ScalarField f(grid);
  for (std::size_t node = 0; node < grid.size(); ++node) {
    const auto x = grid.position(node);
    f(node, 0) = psi(x[0], x[1], x[2]);
  }
  return grad(f);
}

// Returns the gradient as a degree-1 field.
VecField random_gradient(const Grid3& grid, std::mt19937_64& gen) {
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  std::uniform_int_distribution<int> freq(1, 3);
  double k[3][3], phase[3], amp[3], quad[10];
  for (int m = 0; m < 3; ++m) {
    for (int c = 0; c < 3; ++c) k[m][c] = freq(gen) * (coef(gen) < 0 ? -1.0 : 1.0);
    phase[m] = 3.0 * coef(gen);
    amp[m] = coef(gen);
  }
  for (double& q : quad) q = coef(gen);
  return sample_gradient(grid, [&](double x, double y, double z) {
    double v = quad[0] * x + quad[1] * y + quad[2] * z + quad[3] * x * x + quad[4] * y * y +
               quad[5] * z * z + quad[6] * x * y + quad[7] * y * z + quad[8] * z * x + quad[9];
    for (int m = 0; m < 3; ++m) v += amp[m] * std::sin(k[m][0] * x + k[m][1] * y + k[m][2] * z + phase[m]);
    return v;
  });
}

double relative_residual(const VecField& curl_a, const VecField& g) {
  const double gn = l2_norm(g);
  const double rn = l2_norm(combine(1.0, curl_a, -1.0, g));
  return gn > 0.0 ? rn / gn : rn;
}

}  // namespace

Json GaugeReport::to_json() const {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["kind"] = "gauge";
  j["curl_residual_rel"] = curl_residual_rel;
  j["div_norm"] = div_norm;
  j["normal_trace_norm"] = normal_trace_norm;
  j["weak_trace_defect"] = weak_trace_defect;
  j["iterations"] = iterations;
  j["gradient_rel"] = gradient_rel;
  j["converged"] = converged;
  j["l32_l1_ratio"] = l32_l1_ratio;
  return j;
}

GaugeNotConverged::GaugeNotConverged(GaugeResult partial)
    : Error(ErrorCode::NotConverged,
            "gauge solve stopped after " + std::to_string(partial.report.iterations) +
                " iterations at relative gradient " + std::to_string(partial.report.gradient_rel)),
      partial_(std::move(partial)) {}

GaugeResult canonical_gauge(const VecField& area_form, const GaugeSolveConfig& cfg) {
  if (area_form.degree() != FormDegree::Two) {
    throw Error(ErrorCode::InvalidArgument, "gauge solve expects a 2-form");
  }
  const Grid3& grid = area_form.grid();
  const int max_iters = cfg.max_iters.value_or(20 * grid.n());
  const double mu_b = cfg.boundary_penalty.value_or(10.0 / grid.h());
  if (!(max_iters > 0 && cfg.rel_tol > 0.0 && cfg.rel_tol < 1.0 && mu_b > 0.0 &&
        cfg.div_penalty > 0.0)) {
    throw Error(ErrorCode::InvalidArgument,
                "gauge config needs positive max_iters and penalties and 0 < rel_tol < 1");
  }
  if (!area_form.all_finite()) throw Error(ErrorCode::InvalidArgument, "area form is not finite");

  const SparseMatrix op = gauge_operator(grid, cfg.div_penalty, mu_b);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(op.rows());
  for (std::size_t node = 0; node < grid.size(); ++node) {
    const double sw = std::sqrt(grid.weight(node));
    for (int c = 0; c < 3; ++c) rhs[static_cast<Eigen::Index>(3 * node + c)] = sw * area_form(node, c);
  }
  const CglsResult sol = cgls(op, rhs, {max_iters, cfg.rel_tol, 10});

  VecField a(grid, FormDegree::One,
             std::vector<double>(sol.x.data(), sol.x.data() + sol.x.size()));
  GaugeReport rep;
  rep.curl_residual_rel = relative_residual(curl(a), area_form);
  rep.div_norm = l2_norm(div(star(a)));
  rep.normal_trace_norm = normal_trace_norm(a);
  rep.weak_trace_defect = weak_trace_defect(a);
  rep.iterations = sol.iterations;
  rep.gradient_rel = sol.gradient_rel;
  rep.converged = sol.converged;
  rep.l32_l1_ratio = l32_l1_ratio(a, area_form);
  GaugeResult result{std::move(a), rep};
  if (!sol.converged) throw GaugeNotConverged(std::move(result));
  return result;
}

double normal_trace_norm(const VecField& a) {
  const Grid3& grid = a.grid();
  const int last = grid.n() - 1;
  double s = 0.0;
  for (std::size_t node = 0; node < grid.size(); ++node) {
    const auto ijk = grid.ijk(node);
    for (int axis = 0; axis < 3; ++axis) {
      if (ijk[axis] != 0 && ijk[axis] != last) continue;
      s += face_weight(grid, node, axis) * a(node, axis) * a(node, axis);
    }
  }
  return std::sqrt(s);
}

double weak_trace_defect(const VecField& a) {
  const Grid3& grid = a.grid();
  const double an = l2_norm(a);
  if (an == 0.0) return 0.0;
  const std::vector<ScalarFn> tests = {
      [](double x, double, double) { return x; },
      [](double, double y, double) { return y; },
      [](double, double, double z) { return z; },
      [](double x, double y, double) { return x * y; },
      [](double, double y, double z) { return y * z; },
      [](double x, double, double z) { return z * x; },
      [](double x, double y, double z) { return x * x - 0.5 * y * y + 0.25 * z * z; },
      [](double x, double y, double z) { return std::sin(2 * x + y) * std::cos(z); },
      [](double x, double y, double z) { return std::exp(0.5 * x - y) + z * z * z; },
      [](double x, double y, double z) { return std::cos(3 * x) * std::sin(2 * y - z); },
  };
  double worst = 0.0;
  for (const ScalarFn& psi : tests) {
    const VecField g = sample_gradient(grid, psi);
    const double gn = l2_norm(g);
    worst = std::max(worst, std::abs(l2_inner(a, g)) / (an * gn));
  }
  return worst;
}

double gradient_orthogonality(const VecField& a, int trials, std::uint64_t seed) {
  if (trials < 1) throw Error(ErrorCode::InvalidArgument, "need at least one trial");
  const double an = l2_norm(a);
  if (an == 0.0) return 0.0;
  std::mt19937_64 gen(seed);
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const VecField g = random_gradient(a.grid(), gen);
    const double gn = l2_norm(g);
    if (gn == 0.0) continue;
    worst = std::max(worst, std::abs(l2_inner(a, g)) / (an * gn));
  }
  return worst;
}

double gauge_minimality_check(const VecField& a, int trials, std::uint64_t seed) {
  if (trials < 1) throw Error(ErrorCode::InvalidArgument, "need at least one trial");
  const double an = l2_norm(a);
  if (an == 0.0) return 0.0;
  std::mt19937_64 gen(seed);
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const VecField g = random_gradient(a.grid(), gen);
    const double gn2 = l2_inner(g, g);
    if (gn2 == 0.0) continue;
    const double c = l2_inner(a, g);
    const double best = std::sqrt(std::max(0.0, an * an - c * c / gn2));
    worst = std::max(worst, (an - best) / an);
  }
  return worst;
}

double l32_l1_ratio(const VecField& a, const VecField& area_form) {
  const double g1 = l1_norm(area_form, Region::ball());
  if (g1 == 0.0) return 0.0;
  return lp_norm(a, 1.5, Region::ball()) / g1;
}

}  // namespace hopflift
