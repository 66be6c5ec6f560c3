// Copyright 2026 The hopflift Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cstdlib>

#include "hopflift/fields/operators.hpp"
#include "hopflift/fields/quadrature.hpp"
#include "hopflift/hodge/cgls.hpp"
#include "hopflift/hodge/gauge.hpp"
#include "hopflift/pullback/pullback.hpp"
#include "hopflift/testmaps/testmaps.hpp"
#include "test_support.hpp"

using namespace hopflift;
using namespace hopflift::testing;

namespace {

double rel_error(const VecField& a, const VecField& ref) {
  return l2_norm(combine(1.0, a, -1.0, ref)) / l2_norm(ref);
}

// Data whose curl lies in the discrete range: a0 = *curl_h(w), G = curl_h(a0).
struct DiscreteData {
  VecField a0;
  VecField g;
};
DiscreteData discrete_data(const Grid3& grid) {
  const GaugeBump bump = gen_gauge_bump(grid);
  VecField a0 = star(curl(bump.potential));
  VecField g = curl(a0);
  return {std::move(a0), std::move(g)};
}

}  // namespace

TEST_CASE("cgls solves a small least-squares problem") {
  std::vector<Eigen::Triplet<double>> t = {{0, 0, 2.0}, {1, 1, 1.0}, {2, 0, 1.0}, {2, 1, 1.0}};
  SparseMatrix a(3, 2);
  a.setFromTriplets(t.begin(), t.end());
  Eigen::VectorXd b(3);
  b << 2.0, 1.0, 3.0;
  const CglsResult r = cgls(a, b, {50, 1e-14, 10});
  // Normal equations [[5,1],[1,2]] x = [7,4].
  CHECK(r.converged);
  CHECK(r.x[0] == doctest::Approx(10.0 / 9.0));
  CHECK(r.x[1] == doctest::Approx(13.0 / 9.0));
  const CglsResult zero = cgls(a, Eigen::VectorXd::Zero(3), {});
  CHECK(zero.converged);
  CHECK(zero.iterations == 0);
}

TEST_CASE("zero area form gives the zero gauge") {
  const Grid3 g = make_grid(9, 0.0);
  const GaugeResult r = canonical_gauge(VecField(g, FormDegree::Two));
  CHECK(max_norm(r.gauge) == 0.0);
  CHECK(r.report.curl_residual_rel == 0.0);
  CHECK(r.report.div_norm == 0.0);
  CHECK(r.report.normal_trace_norm == 0.0);
  CHECK(r.report.iterations == 0);
  CHECK(r.report.l32_l1_ratio == 0.0);
}

TEST_CASE("discrete manufactured gauge is recovered to solver precision") {
  const Grid3 g = make_grid(33, 0.0);
  const DiscreteData d = discrete_data(g);
  CHECK(max_norm(div(star(d.a0))) < 1e-12 * max_norm(d.a0));
  const GaugeResult r = canonical_gauge(d.g);
  CHECK(r.report.converged);
  CHECK(rel_error(r.gauge, d.a0) <= 1e-6);
  CHECK(gradient_orthogonality(r.gauge, 20) <= 1e-6);
  CHECK(gauge_minimality_check(r.gauge, 20) <= 1e-6);
  CHECK(r.report.weak_trace_defect <= 1e-6);
  CHECK(r.report.curl_residual_rel <= 1e-6);
}

TEST_CASE("analytic manufactured gauge: residual and recovery shrink with n") {
  double prev_res = 1e300, prev_err = 1e300;
  for (int n : {17, 33, 49}) {
    const Grid3 g = make_grid(n, 0.0);
    const GaugeBump bump = gen_gauge_bump(g);
    const GaugeResult r = canonical_gauge(bump.area_form);
    const double err = rel_error(r.gauge, bump.gauge);
    CHECK(r.report.curl_residual_rel < prev_res);
    CHECK(err < prev_err);
    if (n > 17) CHECK(prev_err / err > 2.0);
    CHECK(gauge_minimality_check(r.gauge, 20) <= 1e-6);
    prev_res = r.report.curl_residual_rel;
    prev_err = err;
  }
}

TEST_CASE("hedgehog has no exact gauge") {
  const Grid3 g = make_grid(17, 0.0);
  const VecField D = pullback_area_form(gen_hedgehog(g));
  try {
    const GaugeResult r = canonical_gauge(D);
    CHECK(r.report.curl_residual_rel > 1e-2);
  } catch (const GaugeNotConverged& e) {
    CHECK(e.code() == ErrorCode::NotConverged);
    CHECK(e.partial().report.curl_residual_rel > 1e-2);
  }
}

TEST_CASE("canonical gauge is linear in the data") {
  const Grid3 g = make_grid(17, 0.0);
  const VecField g1 = discrete_data(g).g;
  const VecField g2 = curl(sample_vec(g, FormDegree::One, [](const Point& x) {
    const double s = std::max(0.0, 1.0 - (x[0] * x[0] + x[1] * x[1] + x[2] * x[2]) / 0.64);
    return Point{s * s * s * x[1], -s * s * s * x[0] * x[2], s * s * s};
  }));
  GaugeSolveConfig cfg;
  cfg.rel_tol = 1e-10;
  const VecField a1 = canonical_gauge(g1, cfg).gauge;
  const VecField a2 = canonical_gauge(g2, cfg).gauge;
  const VecField a12 = canonical_gauge(combine(2.0, g1, -0.5, g2), cfg).gauge;
  const VecField expected = combine(2.0, a1, -0.5, a2);
  CHECK(rel_error(a12, expected) <= 1e-6);
}

TEST_CASE("minimality check detects an added gradient") {
  const Grid3 g = make_grid(17, 0.0);
  CHECK(gauge_minimality_check(VecField(g, FormDegree::One), 5) == 0.0);
  const DiscreteData d = discrete_data(g);
  const VecField bump = grad(sample_scalar(g, [](const Point& x) { return x[0] * x[1]; }));
  const VecField perturbed = combine(1.0, d.a0, 0.5, bump);
  CHECK(gauge_minimality_check(perturbed, 20) > 1e-3);
  CHECK(gradient_orthogonality(perturbed, 20) > 1e-2);
  CHECK(weak_trace_defect(bump) > 0.1);
}

TEST_CASE("gauge solver errors") {
  const Grid3 g = make_grid(9, 0.0);
  const DiscreteData d = discrete_data(make_grid(17, 0.0));
  SUBCASE("bad configuration") {
    GaugeSolveConfig cfg;
    cfg.rel_tol = 1.5;
    CHECK_THROWS_AS(canonical_gauge(VecField(g, FormDegree::Two), cfg), Error);
    cfg = {};
    cfg.div_penalty = 0.0;
    CHECK_THROWS_AS(canonical_gauge(VecField(g, FormDegree::Two), cfg), Error);
  }
  SUBCASE("wrong degree") {
    CHECK_THROWS_AS(canonical_gauge(VecField(g, FormDegree::One)), Error);
  }
  SUBCASE("iteration cap returns the partial result") {
    GaugeSolveConfig cfg;
    cfg.max_iters = 5;
    try {
      canonical_gauge(d.g, cfg);
      FAIL("expected NotConverged");
    } catch (const GaugeNotConverged& e) {
      CHECK(e.code() == ErrorCode::NotConverged);
      CHECK(e.partial().report.iterations == 5);
      CHECK_FALSE(e.partial().report.converged);
      CHECK(e.partial().gauge.all_finite());
    }
  }
}

TEST_CASE("gauge solve does not depend on the worker count") {
  const DiscreteData d = discrete_data(make_grid(17, 0.0));
  ::setenv("HOPFLIFT_THREADS", "1", 1);
  const VecField serial = canonical_gauge(d.g).gauge;
  ::setenv("HOPFLIFT_THREADS", "5", 1);
  const VecField parallel = canonical_gauge(d.g).gauge;
  ::unsetenv("HOPFLIFT_THREADS");
  CHECK(max_diff(serial, parallel) == 0.0);
}
