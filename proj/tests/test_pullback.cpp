// Copyright 2026 The hopflift Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hopflift/fields/operators.hpp"
#include "hopflift/fields/quadrature.hpp"
#include "hopflift/hopf/hopf.hpp"
#include "hopflift/pullback/pullback.hpp"
#include "hopflift/testmaps/testmaps.hpp"
#include "test_support.hpp"

using namespace hopflift;
using namespace hopflift::testing;

namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;

// Inverse stereographic image of a complex value.
Point stereo(double re, double im) {
  const double m = re * re + im * im;
  return {2 * re / (m + 1), 2 * im / (m + 1), (m - 1) / (m + 1)};
}

SphereMapField smooth_map(const Grid3& g) {
  SphereMapField u(g);
  sample_into(u, [](const Point& x) {
    return stereo(1.5 + x[0] + 0.5 * x[1] * x[2], 0.3 + std::sin(x[1]) - 0.4 * x[2]);
  });
  return u;
}

std::array<std::array<double, 3>, 3> random_rotation(std::mt19937_64& gen) {
  std::normal_distribution<double> nd;
  double q[4] = {nd(gen), nd(gen), nd(gen), nd(gen)};
  const double n = std::sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]);
  for (double& c : q) c /= n;
  const double a = q[0], b = q[1], c = q[2], d = q[3];
  return {{{a * a + b * b - c * c - d * d, 2 * (b * c - a * d), 2 * (b * d + a * c)},
           {2 * (b * c + a * d), a * a - b * b + c * c - d * d, 2 * (c * d - a * b)},
           {2 * (b * d - a * c), 2 * (c * d + a * b), a * a - b * b - c * c + d * d}}};
}

}  // namespace

TEST_CASE("pullback vanishes for constant and one-variable maps") {
  const Grid3 g = make_grid(17, 0.0);
  CHECK(max_norm(pullback_area_form(gen_constant(g, S2Point{{0, 0, 1}}))) == 0.0);
  SphereMapField u(g);
  sample_into(u, [](const Point& x) { return Point{std::cos(2 * x[0]), std::sin(2 * x[0]), 0.0}; });
  CHECK(max_norm(pullback_area_form(u)) == 0.0);
}

TEST_CASE("hedgehog pullback converges to x/|x|^3 away from the origin") {
  double prev = 0.0;
  for (int n : {33, 65}) {
    const Grid3 g = make_grid(n, 0.0);
    const VecField D = pullback_area_form(gen_hedgehog(g));
    double worst = 0.0;
    for (std::size_t node = 0; node < g.size(); ++node) {
      const double r2 = g.radius_squared(node);
      if (r2 < 0.09) continue;
      const auto x = g.position(node);
      const double r3 = r2 * std::sqrt(r2);
      double err = 0.0;
      for (int c = 0; c < 3; ++c) err += std::pow(D(node, c) - x[c] / r3, 2);
      worst = std::max(worst, std::sqrt(err) * r2);  // relative to |x|^-2
    }
    CHECK(worst < 40.0 * g.h() * g.h());
    if (prev > 0.0) CHECK(prev / worst > 3.0);
    prev = worst;
  }
}

TEST_CASE("pointwise identities on exact-unit inputs") {
  const Grid3 g = make_grid(65, 0.0);
  const auto fam = gen_lift_family(g, std::numbers::pi / 4, {1, 0, 0}, {0, 1, 0});
  for (const SphereMapField& u :
       {fam.u, gen_hedgehog(g), gen_constant(g, S2Point{{1, 0, 0}}),
        gen_planar(g, PlanarKind::GaussianBump), gen_planar(g, PlanarKind::LinearWinding),
        smooth_map(g)}) {
    const Report r = pointwise_identities(u);
    CHECK(r.metric("norm_identity_defect") <= 1e-10);
    CHECK(r.metric("amgm_violation") <= 1e-10);
    CHECK(r.passed());
  }
}

TEST_CASE("norm identity defect is linear in an injected norm error") {
  const Grid3 g = make_grid(33, 0.0);
  const SphereMapField base = smooth_map(g);
  std::vector<double> defects;
  for (double delta : {1e-6, 2e-6, 4e-6}) {
    SphereMapField u = base;
    for (std::size_t node = 0; node < g.size(); ++node) {
      const auto x = g.position(node);
      const double s = 1.0 + delta * (1.0 + 0.5 * std::sin(3 * x[0] + x[1]));
      for (int c = 0; c < 3; ++c) u(node, c) *= s;
    }
    defects.push_back(pointwise_identities(u).metric("norm_identity_defect"));
  }
  CHECK(defects[0] > 1e-9);
  CHECK(defects[1] / defects[0] == doctest::Approx(2.0).epsilon(0.01));
  CHECK(defects[2] / defects[1] == doctest::Approx(2.0).epsilon(0.01));
}

TEST_CASE("exactness verdicts") {
  SUBCASE("constant map") {
    const Grid3 g = make_grid(33, 0.0);
    const ExactnessReport r = exactness_defect(gen_constant(g, S2Point{{0, 0, 1}}));
    CHECK(r.verdict == ExactnessVerdict::Exact);
    for (const auto& [radius, flux] : r.flux_by_radius) CHECK(flux == 0.0);
  }
  SUBCASE("smooth maps are exact at 10 h^2") {
    const Grid3 g = make_grid(33, 0.0);
    const auto fam = gen_lift_family(g, 0.6, {1, 0.5, 0}, {0, 1, -0.5});
    for (const SphereMapField& u :
         {fam.u, gen_planar(g, PlanarKind::GaussianBump), smooth_map(g)}) {
      const ExactnessReport r = exactness_defect(u);
      CHECK(to_string(r.verdict) == "exact");
      CHECK(r.flux_by_radius.size() == 3);
    }
  }
  SUBCASE("hedgehog is singular with flux 4 pi at every radius") {
    const Grid3 g = make_grid(97, 0.0);
    const ExactnessReport r = exactness_defect(gen_hedgehog(g));
    CHECK(r.verdict == ExactnessVerdict::Singular);
    REQUIRE(r.flux_by_radius.size() == 3);
    for (const auto& [radius, flux] : r.flux_by_radius) {
      CHECK(std::abs(flux - kFourPi) <= 0.01 * kFourPi);
    }
    const Json j = r.to_json();
    CHECK(j["verdict"] == "singular");
    CHECK(j["schema_version"] == kReportSchemaVersion);
  }
}

TEST_CASE("sphere flux quadrature") {
  const Grid3 g = make_grid(33, 0.0);
  const VecField identity =
      sample_vec(g, FormDegree::Two, [](const Point& x) { return x; });
  CHECK(sphere_flux(identity, 0.5) == doctest::Approx(std::numbers::pi / 2).epsilon(0.005));
  const VecField constant =
      sample_vec(g, FormDegree::Two, [](const Point&) { return Point{0.3, -1.0, 2.0}; });
  CHECK(std::abs(sphere_flux(constant, 0.5)) <= 1e-3);
  const VecField solid = sample_vec(g, FormDegree::Two, [](const Point& x) {
    const double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
    const double r3 = std::max(r * r * r, 1e-12);
    return Point{x[0] / r3, x[1] / r3, x[2] / r3};
  });
  CHECK(sphere_flux(solid, 0.5) == doctest::Approx(kFourPi).epsilon(0.01));
  for (double bad : {0.0, -0.1, 0.9}) {
    try {
      sphere_flux(identity, bad);
      FAIL("expected RadiusOutOfRange");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::RadiusOutOfRange);
    }
  }
}

TEST_CASE("pullback is invariant under target rotations") {
  const Grid3 g = make_grid(17, 0.0);
  const SphereMapField u = smooth_map(g);
  const VecField D = pullback_area_form(u);
  auto gen = rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    const auto R = random_rotation(gen);
    SphereMapField ru(g);
    for (std::size_t node = 0; node < g.size(); ++node) {
      for (int r = 0; r < 3; ++r) {
        ru(node, r) = R[r][0] * u(node, 0) + R[r][1] * u(node, 1) + R[r][2] * u(node, 2);
      }
    }
    CHECK(max_diff(pullback_area_form(ru), D) <= 1e-12 * std::max(1.0, max_norm(D)));
  }
}

TEST_CASE("swapping two domain axes transforms D as a 2-form") {
  const Grid3 g = make_grid(17, 0.0);
  const SphereMapField u = smooth_map(g);
  SphereMapField swapped(g);
  for (int k = 0; k < g.n(); ++k) {
    for (int j = 0; j < g.n(); ++j) {
      for (int i = 0; i < g.n(); ++i) {
        for (int c = 0; c < 3; ++c) swapped(g.index(i, j, k), c) = u(g.index(j, i, k), c);
      }
    }
  }
  const VecField D = pullback_area_form(u);
  const VecField Ds = pullback_area_form(swapped);
  double worst = 0.0;
  for (int k = 0; k < g.n(); ++k) {
    for (int j = 0; j < g.n(); ++j) {
      for (int i = 0; i < g.n(); ++i) {
        const std::size_t a = g.index(i, j, k), b = g.index(j, i, k);
        worst = std::max({worst, std::abs(Ds(a, 0) + D(b, 1)), std::abs(Ds(a, 1) + D(b, 0)),
                          std::abs(Ds(a, 2) + D(b, 2))});
      }
    }
  }
  CHECK(worst <= 1e-13);
}

TEST_CASE("pullback vanishes where the map is locally constant") {
  const Grid3 g = make_grid(33, 0.0);
  SphereMapField u(g);
  sample_into(u, [](const Point& x) {
    const double s = std::max(0.0, -x[0]);
    return stereo(s * s * s * (1 + x[1]), s * s * x[2]);
  });
  const VecField D = pullback_area_form(u);
  CHECK(max_norm(D) > 1e-3);
  const int mid = (g.n() - 1) / 2;
  double worst = 0.0;
  for (std::size_t node = 0; node < g.size(); ++node) {
    if (g.ijk(node)[0] <= mid) continue;  // stencil stays in x1 >= 0
    for (int c = 0; c < 3; ++c) worst = std::max(worst, std::abs(D(node, c)));
  }
  CHECK(worst == 0.0);
}

TEST_CASE("curl of a lift's gauge is the pullback of its projection") {
  double prev = 0.0;
  for (int n : {17, 33, 65}) {
    const Grid3 g = make_grid(n, 0.0);
    LiftField l(g);
    for (std::size_t node = 0; node < g.size(); ++node) {
      const Point x = g.position(node);
      const double t = 0.7 + 0.3 * x[0] * x[1];
      const double p1 = x[2] + 0.5 * x[0], p2 = std::sin(x[1]) - x[2];
      l.set(node, {std::sin(t) * std::cos(p1), std::sin(t) * std::sin(p1),
                   std::cos(t) * std::cos(p2), std::cos(t) * std::sin(p2)});
    }
    const VecField D = pullback_area_form(project(l));
    const double err = l2_norm(combine(1.0, curl(gauge_of_lift(l)), -1.0, D)) / l2_norm(D);
    CHECK(err < 0.01);
    if (prev > 0.0) CHECK(prev / err > 3.5);
    prev = err;
  }
}
