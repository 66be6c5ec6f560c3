// Copyright 2026 The hopflift Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hopflift/fields/operators.hpp"
#include "hopflift/fields/quadrature.hpp"
#include "hopflift/hopf/hopf.hpp"
#include "hopflift/testmaps/testmaps.hpp"
#include "test_support.hpp"

using namespace hopflift;
using namespace hopflift::testing;

namespace {

Vec4 random_s3(std::mt19937_64& gen) {
  std::normal_distribution<double> nd;
  Vec4 q{nd(gen), nd(gen), nd(gen), nd(gen)};
  const double n = std::sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]);
  for (double& c : q) c /= n;
  return q;
}

Vec3 random_s2(std::mt19937_64& gen) {
  std::normal_distribution<double> nd;
  Vec3 p{nd(gen), nd(gen), nd(gen)};
  const double n = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
  for (double& c : p) c /= n;
  return p;
}

double dist3(const Vec3& a, const Vec3& b) {
  return std::sqrt((a[0] - b[0]) * (a[0] - b[0]) + (a[1] - b[1]) * (a[1] - b[1]) +
                   (a[2] - b[2]) * (a[2] - b[2]));
}

}  // namespace

TEST_CASE("hopf map on reference points") {
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(dist3(hopf(S3Point{{1, 0, 0, 0}}).x, {0, 0, 1}) < 1e-15);
  CHECK(dist3(hopf(S3Point{{0, 0, 1, 0}}).x, {0, 0, -1}) < 1e-15);
  CHECK(dist3(hopf(S3Point{{r, 0, r, 0}}).x, {1, 0, 0}) < 1e-15);
  try {
    hopf(S3Point{{2, 0, 0, 0}});
    FAIL("expected NotUnit");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotUnit);
  }
}

TEST_CASE("hopf map is invariant under the circle action and lands on S^2") {
  auto gen = rng(1);
  std::uniform_real_distribution<double> angle(-10, 10);
  for (int trial = 0; trial < 2000; ++trial) {
    const Vec4 q = random_s3(gen);
    const Vec3 p = hopf(S3Point{q}).x;
    CHECK(std::abs(std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]) - 1.0) <= 1e-14);
    CHECK(dist3(hopf(S3Point{phase_rotate(q, angle(gen))}).x, p) <= 1e-14);
  }
}

TEST_CASE("theta is the inner product with the vertical field") {
  CHECK(theta_at(S3Point{{1, 0, 0, 0}}, {0, 1, 0, 0}) == 1.0);
  auto gen = rng(2);
  for (int trial = 0; trial < 500; ++trial) {
    const Vec4 q = random_s3(gen);
    CHECK(theta_at(S3Point{q}, vertical(q)) == doctest::Approx(1.0).epsilon(1e-14));
    // Project a random vector away from q and iq.
    Vec4 v = random_s3(gen);
    const Vec4 iq = vertical(q);
    const double a = v[0] * q[0] + v[1] * q[1] + v[2] * q[2] + v[3] * q[3];
    const double b = v[0] * iq[0] + v[1] * iq[1] + v[2] * iq[2] + v[3] * iq[3];
    for (int c = 0; c < 4; ++c) v[c] -= a * q[c] + b * iq[c];
    CHECK(std::abs(theta_at(S3Point{q}, v)) < 1e-14);
  }
  try {
    theta_at(S3Point{{1, 0, 0, 0}}, {1, 0, 0, 0});
    FAIL("expected NotTangent");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotTangent);
  }
}

TEST_CASE("stereographic section is a right inverse away from its pole") {
  SUBCASE("north pole in the south chart") {
    const S3Point s = stereo_section(S2Point{{0, 0, 1}});
    CHECK(dist3(hopf(s).x, {0, 0, 1}) <= 1e-12);
  }
  SUBCASE("random points, default and rotated poles") {
    auto gen = rng(3);
    std::vector<S2Point> poles = {kSouthPole, S2Point{{0, 0, 1}}, S2Point{random_s2(gen)},
                                  S2Point{random_s2(gen)}};
    for (const S2Point& pole : poles) {
      const StereoSection section(pole);
      double worst = 0.0;
      int tested = 0;
      while (tested < 10000) {
        const Vec3 p = random_s2(gen);
        if (angular_distance(p, pole.x) < 0.2) continue;
        const S3Point q = section(S2Point{p});
        worst = std::max(worst, dist3(hopf(q).x, p));
        ++tested;
      }
      CHECK(worst <= 1e-12);
    }
  }
  SUBCASE("section is Lipschitz on the chart") {
    auto gen = rng(4);
    const StereoSection section;
    for (int trial = 0; trial < 1000; ++trial) {
      Vec3 p = random_s2(gen);
      if (angular_distance(p, kSouthPole.x) < 0.5) continue;
      Vec3 p2 = p;
      p2[0] += 1e-6;
      const double n = std::sqrt(p2[0] * p2[0] + p2[1] * p2[1] + p2[2] * p2[2]);
      for (double& c : p2) c /= n;
      const Vec4 a = section(S2Point{p}).x, b = section(S2Point{p2}).x;
      double d = 0;
      for (int c = 0; c < 4; ++c) d += (a[c] - b[c]) * (a[c] - b[c]);
      CHECK(std::sqrt(d) <= 20.0 * dist3(p, p2));
    }
  }
  SUBCASE("the pole itself is rejected") {
    try {
      stereo_section(kSouthPole);
      FAIL("expected TooCloseToPole");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::TooCloseToPole);
    }
  }
}

TEST_CASE("frame checks in Hopf coordinates") {
  const Report r = frame_checks(std::numbers::pi / 4, 0.3, 1.1);
  CHECK(r.metric("max_defect") <= 1e-10);
  CHECK(r.passed());
  CHECK(r.metric("theta_tau1") <= 1e-15);
  CHECK(r.metric("theta_tau2") <= 1e-15);
  CHECK(r.metric("theta_tau3") <= 1e-15);

  const Report sweep = frame_check_sweep(1000);
  CHECK(sweep.metric("max_defect") <= 1e-9);
  CHECK(sweep.passed());

  CHECK_THROWS_AS(frame_checks(0.0, 0.0, 0.0), Error);
  CHECK_THROWS_AS(frame_checks(std::numbers::pi / 2, 0.0, 0.0), Error);
}

TEST_CASE("gauge of a lift") {
  SUBCASE("constant lift has zero gauge") {
    LiftField l(make_grid(7, 0.0));
    for (std::size_t node = 0; node < l.size(); ++node) l.set(node, {0.5, 0.5, 0.5, 0.5});
    CHECK(max_norm(gauge_of_lift(l)) == 0.0);
  }
  SUBCASE("Hopf-coordinate family converges to (1, 1, 0) at second order") {
    double prev = 0.0;
    for (int n : {17, 33, 65}) {
      const Grid3 g = make_grid(n, 0.0);
      const auto fam = gen_lift_family(g, std::numbers::pi / 4, {1, 0, 0}, {0, 1, 0});
      const VecField eta = gauge_of_lift(fam.lift);
      const double err = max_diff(eta, fam.eta);
      CHECK(err < 0.5 * g.h() * g.h() + 1e-12);
      if (prev > 0.0) CHECK(prev / err > 3.5);
      prev = err;
    }
  }
  SUBCASE("phase shift of a constant section adds twice the gradient") {
    const Grid3 g = make_grid(33, 0.0);
    const ScalarField phase =
        sample_scalar(g, [](const Point& x) { return 0.7 * x[0] - 0.4 * x[1] * x[2]; });
    LiftField constant(g);
    const Vec4 q0 = stereo_section(S2Point{{0.6, 0.0, 0.8}}).x;
    for (std::size_t node = 0; node < g.size(); ++node) constant.set(node, q0);
    const VecField eta = gauge_of_lift(rotate_phase(constant, phase));
    const VecField expected = combine(2.0, grad(phase), 0.0, grad(phase));
    CHECK(max_diff(eta, expected) < 2.0 * g.h() * g.h());
  }
  SUBCASE("gauge-shift law for a nonconstant lift") {
    for (int n : {17, 33}) {
      const Grid3 g = make_grid(n, 0.0);
      const auto fam = gen_lift_family(g, 0.5, {0.5, 1.0, 0.0}, {0.0, -0.5, 1.0});
      const ScalarField phase = sample_scalar(
          g, [](const Point& x) { return std::sin(x[0]) * x[1] + 0.3 * x[2] * x[2]; });
      const VecField lhs = gauge_of_lift(rotate_phase(fam.lift, phase));
      const VecField rhs = combine(1.0, gauge_of_lift(fam.lift), 2.0, grad(phase));
      CHECK(max_diff(lhs, rhs) < 4.0 * g.h() * g.h());
    }
  }
}

TEST_CASE("energy identity on the lift family") {
  SUBCASE("defect vanishes at second order") {
    double prev = 0.0;
    for (int n : {17, 33, 65}) {
      const Grid3 g = make_grid(n, 0.0);
      const auto fam = gen_lift_family(g, 0.6, {1.0, 0.5, 0.0}, {0.0, 1.0, -0.5});
      const ScalarField defect =
          energy_identity_defect(fam.lift, fam.u, gauge_of_lift(fam.lift));
      const double err = max_norm(defect);
      CHECK(err < 3.0 * g.h() * g.h());
      if (prev > 0.0) CHECK(prev / err > 3.5);
      prev = err;
    }
  }
  SUBCASE("constant lift") {
    const Grid3 g = make_grid(9, 0.0);
    LiftField l(g);
    for (std::size_t node = 0; node < l.size(); ++node) l.set(node, {0, 1, 0, 0});
    const SphereMapField u = project(l);
    CHECK(max_norm(energy_identity_defect(l, u, VecField(g, FormDegree::One))) == 0.0);
  }
  SUBCASE("doubling the gauge leaves -3/4 |eta|^2") {
    const Grid3 g = make_grid(33, 0.0);
    const auto fam = gen_lift_family(g, std::numbers::pi / 4, {1, 0, 0}, {0, 1, 0});
    const VecField eta = gauge_of_lift(fam.lift);
    const ScalarField base = energy_identity_defect(fam.lift, fam.u, eta);
    const ScalarField doubled = energy_identity_defect(fam.lift, fam.u, combine(2.0, eta, 0.0, eta));
    for (std::size_t node = 0; node < g.size(); node += 97) {
      double e2 = 0;
      for (int c = 0; c < 3; ++c) e2 += eta(node, c) * eta(node, c);
      CHECK(doubled(node, 0) - base(node, 0) == doctest::Approx(-0.75 * e2).epsilon(1e-12));
    }
  }
}
