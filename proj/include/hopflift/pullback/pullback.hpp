// Copyright 2026 The hopflift Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopflift/common/report.hpp"
#include "hopflift/fields/field.hpp"

namespace hopflift {

// Vector proxy D(u) of the pulled-back area form:
// (u.(d2u x d3u), u.(d3u x d1u), u.(d1u x d2u)) from grid partials.
VecField pullback_area_form(const SphereMapField& u);

// Norm identity |D|^2 = sum_{j<l} |p_j x p_l|^2 with p_j the part of d_j u
// tangent to S^2 at u/|u|, and the bound |D| <= |du|^2 / 2. The identity
// defect is normalized by max(1, sum |p_j x p_l|^2).
Report pointwise_identities(const SphereMapField& u);

enum class ExactnessVerdict { Exact, Singular, Inconclusive };
std::string to_string(ExactnessVerdict v);

struct ExactnessReport {
  ScalarField div_defect;
  double max_interior_div = 0.0;
  double tolerance = 0.0;
  std::vector<std::pair<double, double>> flux_by_radius;
  ExactnessVerdict verdict = ExactnessVerdict::Inconclusive;

  Json to_json() const;
};

inline constexpr double kFluxRadii[] = {0.25, 0.5, 0.75};

// Divergence of D(u) away from the boundary and the origin, plus fluxes
// through origin-centred spheres. Default tolerance is 10 h^2.
//   exact:        max_div * h <= tol and every |flux| <= tol
//   singular:     some |flux| > tol and the fluxes agree in sign and to 5%
//   inconclusive: otherwise
ExactnessReport exactness_defect(const SphereMapField& u,
                                 std::optional<double> tol = std::nullopt);

// Flux of D through the sphere |x| = radius: 801 Fibonacci nodes with equal
// weights, trilinear interpolation. Throws RadiusOutOfRange unless
// 0 < radius < 1 - 3h.
double sphere_flux(const VecField& d, double radius);

}  // namespace hopflift
