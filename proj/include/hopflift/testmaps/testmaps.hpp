// Copyright 2026 The hopflift Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string_view>

#include "hopflift/common/report.hpp"
#include "hopflift/fields/field.hpp"
#include "hopflift/hopf/hopf.hpp"

namespace hopflift {

// u == p. Throws NotUnit unless |p| = 1 within 1e-12.
SphereMapField gen_constant(const Grid3& grid, const S2Point& p);

// u(x) = x / |x|, with u(0) := (0, 0, 1).
SphereMapField gen_hedgehog(const Grid3& grid);

// Closed-form values of the lift family; the gauge is constant in x.
struct LiftFamilyOracle {
  double t0 = 0.0;
  Vec3 a{}, b{};
  Vec3 eta{};
  double lift_energy = 0.0;   // |d u_hat|^2
  double map_energy = 0.0;    // |du|^2
  double gauge_energy = 0.0;  // |eta|^2
  // |d u_hat|^2 - |eta|^2/4 - |du|^2/4 evaluated from the closed forms.
  double energy_identity_defect = 0.0;

  Json to_json() const;
};

struct LiftFamily {
  LiftField lift;
  SphereMapField u;
  VecField eta;
  LiftFamilyOracle oracle;
};

// u_hat(x) = (e^{i a.x} sin t0, e^{i b.x} cos t0), u = h(u_hat) and
// eta = 2 u_hat^* theta = 2 (sin^2 t0 a + cos^2 t0 b), all sampled from closed
// forms. Throws BadLatitude unless 0 < t0 < pi/2.
LiftFamily gen_lift_family(const Grid3& grid, double t0, const Vec3& a, const Vec3& b);

enum class PlanarKind { GaussianBump, LinearWinding };
PlanarKind parse_planar_kind(std::string_view text);

// u(x) = S(F(x1 + i x2)) with S(z) = (2z, 1 - |z|^2) / (1 + |z|^2), which sends
// z = 0 to the north pole. GaussianBump: F(z) = 2 z exp(-|z|^2 / 0.36);
// LinearWinding: F(z) = z / 2. Both ranges stay in the upper hemisphere.
SphereMapField gen_planar(const Grid3& grid, PlanarKind kind);

// Manufactured gauge data from the compactly supported potential
// w = beta(x) c with beta = (1 - |x|^2/R^2)^k on |x| < R, c = (0.3, -0.5, 1):
// a0 = curl w and G = curl curl w, both from closed forms.
struct GaugeBump {
  VecField potential;      // w, degree 1
  VecField gauge;          // a0, degree 1
  VecField area_form;      // G, degree 2
  double support_radius = 0.0;
  int exponent = 0;
};
// Throws InvalidArgument unless 0 < R <= 1 and k >= 3.
GaugeBump gen_gauge_bump(const Grid3& grid, double support_radius = 0.8, int exponent = 4);

}  // namespace hopflift
