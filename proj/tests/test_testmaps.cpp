// Copyright 2026 The hopflift Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hopflift/fields/operators.hpp"
#include "hopflift/fields/quadrature.hpp"
#include "hopflift/testmaps/testmaps.hpp"
#include "test_support.hpp"

using namespace hopflift;
using namespace hopflift::testing;

TEST_CASE("lift family closed forms") {
  const Grid3 g = make_grid(9, 0.0);
  const auto fam = gen_lift_family(g, std::numbers::pi / 4, {1, 0, 0}, {0, 1, 0});
  const auto& o = fam.oracle;
  CHECK(o.eta[0] == doctest::Approx(1.0));
  CHECK(o.eta[1] == doctest::Approx(1.0));
  CHECK(o.eta[2] == 0.0);
  CHECK(o.lift_energy == doctest::Approx(1.0));
  CHECK(o.map_energy == doctest::Approx(2.0));
  CHECK(o.gauge_energy == doctest::Approx(2.0));
  CHECK(std::abs(o.energy_identity_defect) < 1e-15);
}

TEST_CASE("lift family degenerates to a constant map when a = b") {
  const Grid3 g = make_grid(9, 0.0);
  const auto fam = gen_lift_family(g, 0.4, {0.3, 1, 2}, {0.3, 1, 2});
  CHECK(fam.oracle.map_energy == 0.0);
  for (std::size_t node = 0; node < g.size(); ++node) {
    for (int c = 0; c < 3; ++c) CHECK(fam.u(node, c) == doctest::Approx(fam.u(0, c)).epsilon(1e-15));
  }
}

TEST_CASE("lift family rejects boundary latitudes") {
  const Grid3 g = make_grid(5, 0.0);
  for (double t0 : {0.0, std::numbers::pi / 2, -0.1}) {
    try {
      gen_lift_family(g, t0, {1, 0, 0}, {0, 1, 0});
      FAIL("expected BadLatitude");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::BadLatitude);
    }
  }
}

TEST_CASE("generators produce unit fields") {
  const Grid3 g = make_grid(17, 0.0);
  const auto fam = gen_lift_family(g, 0.7, {1, -0.5, 2}, {0, 1, 0.5});
  CHECK(max_unit_defect(fam.lift) <= 1e-14);
  CHECK(max_unit_defect(fam.u) <= 1e-14);
  CHECK(max_unit_defect(gen_hedgehog(g)) <= 1e-14);
  CHECK(max_unit_defect(gen_constant(g, S2Point{{0, 0, 1}})) <= 1e-14);
  CHECK(max_unit_defect(gen_planar(g, PlanarKind::GaussianBump)) <= 1e-14);
  CHECK(max_unit_defect(gen_planar(g, PlanarKind::LinearWinding)) <= 1e-14);

  // h(u_hat) = u pointwise, from closed forms only.
  const SphereMapField projected = project(fam.lift);
  CHECK(max_diff(projected, fam.u) <= 1e-12);
}

TEST_CASE("family gauge matches the discrete gauge at second order") {
  double prev = 0.0;
  for (int n : {17, 33}) {
    const Grid3 g = make_grid(n, 0.0);
    const auto fam = gen_lift_family(g, 0.7, {1, -0.5, 0.5}, {0, 1, 0.5});
    const double err = max_diff(gauge_of_lift(fam.lift), fam.eta);
    if (prev > 0.0) CHECK(prev / err > 3.5);
    prev = err;
  }
}

TEST_CASE("hedgehog") {
  const Grid3 g = make_grid(5, 0.0);
  const SphereMapField u = gen_hedgehog(g);
  const auto a = u.at(g.index(3, 2, 2));  // x = (0.5, 0, 0)
  CHECK(a[0] == 1.0);
  CHECK(a[1] == 0.0);
  CHECK(a[2] == 0.0);
  const auto origin = u.at(g.index(2, 2, 2));
  CHECK(origin[2] == 1.0);
}

TEST_CASE("planar maps") {
  const Grid3 g = make_grid(17, 0.0);
  const SphereMapField bump = gen_planar(g, PlanarKind::GaussianBump);
  // Far field sits at the north pole.
  CHECK(bump(g.index(0, 0, 0), 2) > 0.999);
  for (auto kind : {PlanarKind::GaussianBump, PlanarKind::LinearWinding}) {
    const SphereMapField u = gen_planar(g, kind);
    double lowest = 1.0;
    for (std::size_t node = 0; node < g.size(); ++node) lowest = std::min(lowest, u(node, 2));
    CHECK(lowest > 0.3);
  }
  CHECK(parse_planar_kind("linear-winding") == PlanarKind::LinearWinding);
  CHECK_THROWS_AS(parse_planar_kind("spiral"), Error);
}

TEST_CASE("manufactured gauge bump closed forms agree with the discrete operators") {
  double prev_a = 0.0, prev_g = 0.0;
  for (int n : {33, 65}) {
    const Grid3 g = make_grid(n, 0.0);
    const GaugeBump bump = gen_gauge_bump(g);
    const double err_a = l2_norm(combine(1.0, star(curl(bump.potential)), -1.0, bump.gauge)) /
                         l2_norm(bump.gauge);
    const VecField discrete_g = curl(bump.gauge);
    const double err_g = l2_norm(combine(1.0, discrete_g, -1.0, bump.area_form)) /
                         l2_norm(bump.area_form);
    CHECK(err_a < 0.05);
    CHECK(err_g < 0.1);
    if (prev_a > 0.0) {
      CHECK(prev_a / err_a > 3.5);
      CHECK(prev_g / err_g > 3.5);
    }
    prev_a = err_a;
    prev_g = err_g;
  }
}
