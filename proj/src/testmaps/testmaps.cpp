// Copyright 2026 The hopflift Authors
// SPDX-License-Identifier: Apache-2.0

#include "hopflift/testmaps/testmaps.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

namespace hopflift {

namespace {

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

}  // namespace

SphereMapField gen_constant(const Grid3& grid, const S2Point& p) {
  const double nrm = std::sqrt(dot(p.x, p.x));
  if (!(std::abs(nrm - 1.0) <= 1e-12)) {
    throw Error(ErrorCode::NotUnit, "constant value must be a unit vector");
  }
  SphereMapField u(grid);
  for (std::size_t node = 0; node < u.size(); ++node) u.set(node, p.x);
  return u;
}

SphereMapField gen_hedgehog(const Grid3& grid) {
  SphereMapField u(grid);
  for (std::size_t node = 0; node < u.size(); ++node) {
    const auto x = grid.position(node);
    const double r = std::sqrt(grid.radius_squared(node));
    if (r == 0.0) {
      u.set(node, {0.0, 0.0, 1.0});
    } else {
      u.set(node, {x[0] / r, x[1] / r, x[2] / r});
    }
  }
  return u;
}

Json LiftFamilyOracle::to_json() const {
  return Json{{"t0", t0},
              {"a", a},
              {"b", b},
              {"eta", eta},
              {"lift_energy", lift_energy},
              {"map_energy", map_energy},
              {"gauge_energy", gauge_energy},
              {"energy_identity_defect", energy_identity_defect}};
}

LiftFamily gen_lift_family(const Grid3& grid, double t0, const Vec3& a, const Vec3& b) {
  if (!(t0 > 0.0 && t0 < std::numbers::pi / 2)) {
    throw Error(ErrorCode::BadLatitude, "t0 must lie strictly between 0 and pi/2");
  }
  const double s = std::sin(t0), c = std::cos(t0);
  const double s2t = std::sin(2 * t0), c2t = std::cos(2 * t0);
  const Vec3 diff{a[0] - b[0], a[1] - b[1], a[2] - b[2]};

  LiftFamilyOracle oracle;
  oracle.t0 = t0;
  oracle.a = a;
  oracle.b = b;
  for (int i = 0; i < 3; ++i) oracle.eta[i] = 2.0 * (s * s * a[i] + c * c * b[i]);
  oracle.lift_energy = s * s * dot(a, a) + c * c * dot(b, b);
  oracle.map_energy = s2t * s2t * dot(diff, diff);
  oracle.gauge_energy = dot(oracle.eta, oracle.eta);
  oracle.energy_identity_defect =
      oracle.lift_energy - 0.25 * oracle.gauge_energy - 0.25 * oracle.map_energy;

  LiftField lift(grid);
  SphereMapField u(grid);
  VecField eta(grid, FormDegree::One);
  for (std::size_t node = 0; node < grid.size(); ++node) {
    const auto x = grid.position(node);
    const double pa = dot(a, x), pb = dot(b, x), pd = pb - pa;
    lift.set(node, {s * std::cos(pa), s * std::sin(pa), c * std::cos(pb), c * std::sin(pb)});
    u.set(node, {s2t * std::cos(pd), s2t * std::sin(pd), -c2t});
    eta.set(node, oracle.eta);
  }
  return LiftFamily{std::move(lift), std::move(u), std::move(eta), oracle};
}

PlanarKind parse_planar_kind(std::string_view text) {
  if (text == "gaussian-bump") return PlanarKind::GaussianBump;
  if (text == "linear-winding") return PlanarKind::LinearWinding;
  throw Error(ErrorCode::InvalidArgument, "unknown planar map '" + std::string(text) + "'");
}

SphereMapField gen_planar(const Grid3& grid, PlanarKind kind) {
  SphereMapField u(grid);
  for (std::size_t node = 0; node < grid.size(); ++node) {
    const auto x = grid.position(node);
    const std::complex<double> zeta(x[0], x[1]);
    std::complex<double> f;
    if (kind == PlanarKind::GaussianBump) {
      f = 2.0 * zeta * std::exp(-std::norm(zeta) / 0.36);
    } else {
      f = 0.5 * zeta;
    }
    const double m = std::norm(f);
    u.set(node, {2.0 * f.real() / (1.0 + m), 2.0 * f.imag() / (1.0 + m), (1.0 - m) / (1.0 + m)});
  }
  return u;
}

GaugeBump gen_gauge_bump(const Grid3& grid, double support_radius, int exponent) {
  if (!(support_radius > 0.0 && support_radius <= 1.0) || exponent < 3) {
    throw Error(ErrorCode::InvalidArgument, "gauge bump needs 0 < R <= 1 and exponent >= 3");
  }
  const double R2 = support_radius * support_radius;
  const Vec3 dir{0.3, -0.5, 1.0};
  const int k = exponent;
  GaugeBump out{VecField(grid, FormDegree::One), VecField(grid, FormDegree::One),
                VecField(grid, FormDegree::Two), support_radius, exponent};
  for (std::size_t node = 0; node < grid.size(); ++node) {
    const auto x = grid.position(node);
    const double s = 1.0 - dot(x, x) / R2;
    if (s <= 0.0) continue;
    const double beta = std::pow(s, k);
    Vec3 g;
    double hess[3][3];
    for (int i = 0; i < 3; ++i) {
      g[i] = k * std::pow(s, k - 1) * (-2.0 * x[i] / R2);
      for (int j = 0; j < 3; ++j) {
        hess[i][j] = k * (k - 1) * std::pow(s, k - 2) * (4.0 * x[i] * x[j] / (R2 * R2)) -
                     (i == j ? k * std::pow(s, k - 1) * 2.0 / R2 : 0.0);
      }
    }
    const double lap = hess[0][0] + hess[1][1] + hess[2][2];
    out.potential.set(node, {beta * dir[0], beta * dir[1], beta * dir[2]});
    // curl(beta c) = grad(beta) x c
    out.gauge.set(node, {g[1] * dir[2] - g[2] * dir[1], g[2] * dir[0] - g[0] * dir[2],
                         g[0] * dir[1] - g[1] * dir[0]});
    // curl(grad(beta) x c) = H c - c lap(beta)
    Vec3 curl2;
    for (int i = 0; i < 3; ++i) {
      curl2[i] = hess[i][0] * dir[0] + hess[i][1] * dir[1] + hess[i][2] * dir[2] - dir[i] * lap;
    }
    out.area_form.set(node, curl2);
  }
  return out;
}

}  // namespace hopflift
