// Copyright 2026 The hopflift Authors
// SPDX-License-Identifier: Apache-2.0

#include "hopflift/pullback/pullback.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hopflift/common/parallel.hpp"
#include "hopflift/fields/operators.hpp"

namespace hopflift {

namespace {

using V3 = std::array<double, 3>;

V3 cross(const V3& a, const V3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
double dot(const V3& a, const V3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

V3 partial_vec(const Partials& d, int axis, std::size_t node) {
  return {d(axis, node, 0), d(axis, node, 1), d(axis, node, 2)};
}

constexpr int kFluxPoints = 801;

}  // namespace

VecField pullback_area_form(const SphereMapField& u) {
  const Grid3& grid = u.grid();
  const Partials d = partials(grid, u.values(), 3);
  VecField out(grid, FormDegree::Two);
  parallel_for(0, grid.size(), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t node = lo; node < hi; ++node) {
      const V3 val = u.at(node);
      const V3 d1 = partial_vec(d, 0, node), d2 = partial_vec(d, 1, node),
               d3 = partial_vec(d, 2, node);
      out.set(node, {dot(val, cross(d2, d3)), dot(val, cross(d3, d1)), dot(val, cross(d1, d2))});
    }
  });
  return out;
}

Report pointwise_identities(const SphereMapField& u) {
  const Grid3& grid = u.grid();
  const Partials d = partials(grid, u.values(), 3);
  const VecField D = pullback_area_form(u);
  std::vector<double> identity(grid.size(), 0.0), amgm(grid.size(), 0.0);
  parallel_for(0, grid.size(), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t node = lo; node < hi; ++node) {
      V3 unit = u.at(node);
      const double len = std::sqrt(dot(unit, unit));
      for (double& c : unit) c /= len;
      std::array<V3, 3> p;
      double energy = 0.0;
      for (int axis = 0; axis < 3; ++axis) {
        const V3 raw = partial_vec(d, axis, node);
        energy += dot(raw, raw);
        const double normal = dot(raw, unit);
        for (int c = 0; c < 3; ++c) p[axis][c] = raw[c] - normal * unit[c];
      }
      double pairs = 0.0;
      for (int j = 0; j < 3; ++j) {
        for (int l = j + 1; l < 3; ++l) {
          const V3 c = cross(p[j], p[l]);
          pairs += dot(c, c);
        }
      }
      const V3 dv = D.at(node);
      const double d2 = dot(dv, dv);
      identity[node] = std::abs(d2 - pairs) / std::max(1.0, pairs);
      amgm[node] = std::max(0.0, std::sqrt(d2) - 0.5 * energy);
    }
  });
  Report r("pointwise_identities");
  double worst_identity = 0.0, worst_amgm = 0.0;
  for (std::size_t node = 0; node < grid.size(); ++node) {
    worst_identity = std::max(worst_identity, identity[node]);
    worst_amgm = std::max(worst_amgm, amgm[node]);
  }
  r.set("norm_identity_defect", worst_identity);
  r.set("amgm_violation", worst_amgm);
  r.set("max_unit_defect", max_unit_defect(u));
  r.check("norm_identity_defect", worst_identity, 1e-10);
  r.check("amgm_violation", worst_amgm, 1e-10);
  return r;
}

std::string to_string(ExactnessVerdict v) {
  switch (v) {
    case ExactnessVerdict::Exact:
      return "exact";
    case ExactnessVerdict::Singular:
      return "singular";
    case ExactnessVerdict::Inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

Json ExactnessReport::to_json() const {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["kind"] = "exactness";
  j["max_interior_div"] = max_interior_div;
  j["tolerance"] = tolerance;
  Json fluxes = Json::array();
  for (const auto& [r, f] : flux_by_radius) fluxes.push_back({{"radius", r}, {"flux", f}});
  j["flux_by_radius"] = fluxes;
  j["verdict"] = to_string(verdict);
  return j;
}

ExactnessReport exactness_defect(const SphereMapField& u, std::optional<double> tol) {
  const Grid3& grid = u.grid();
  const double h = grid.h();
  const VecField D = pullback_area_form(u);
  ExactnessReport rep{div(D), 0.0, tol.value_or(10.0 * h * h), {}, ExactnessVerdict::Inconclusive};

  for (std::size_t node = 0; node < grid.size(); ++node) {
    if (grid.boundary_layer(node) < 2) continue;
    if (grid.radius_squared(node) < 4.0 * h * h) continue;
    rep.max_interior_div = std::max(rep.max_interior_div, std::abs(rep.div_defect(node, 0)));
  }
  for (double r : kFluxRadii) {
    if (r < 1.0 - 3.0 * h) rep.flux_by_radius.emplace_back(r, sphere_flux(D, r));
  }

  bool all_small = true, any_large = false;
  double fmax = 0.0, fmin = 0.0;
  bool have_flux = false, same_sign = true;
  for (const auto& [r, f] : rep.flux_by_radius) {
    all_small = all_small && std::abs(f) <= rep.tolerance;
    any_large = any_large || std::abs(f) > rep.tolerance;
    if (!have_flux) {
      fmax = fmin = f;
      have_flux = true;
    } else {
      same_sign = same_sign && (f > 0) == (fmax > 0);
      fmax = std::max(fmax, f);
      fmin = std::min(fmin, f);
    }
  }
  const double scale = std::max(std::abs(fmax), std::abs(fmin));
  if (rep.max_interior_div * h <= rep.tolerance && all_small) {
    rep.verdict = ExactnessVerdict::Exact;
  } else if (any_large && same_sign && fmax - fmin <= 0.05 * scale) {
    rep.verdict = ExactnessVerdict::Singular;
  } else {
    rep.verdict = ExactnessVerdict::Inconclusive;
  }
  return rep;
}

double sphere_flux(const VecField& d, double radius) {
  const Grid3& grid = d.grid();
  const int n = grid.n();
  const double h = grid.h();
  if (!(radius > 0.0 && radius < 1.0 - 3.0 * h)) {
    throw Error(ErrorCode::RadiusOutOfRange,
                "flux radius must lie in (0, 1 - 3h) = (0, " + std::to_string(1.0 - 3.0 * h) + ")");
  }
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  double total = 0.0;
  for (int p = 0; p < kFluxPoints; ++p) {
    const double z = 1.0 - (2.0 * p + 1.0) / kFluxPoints;
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double az = golden * p;
    const V3 normal{rho * std::cos(az), rho * std::sin(az), z};

    std::array<int, 3> base;
    std::array<double, 3> frac;
    for (int axis = 0; axis < 3; ++axis) {
      const double s = (radius * normal[axis] + 1.0) / h;
      base[axis] = std::clamp(static_cast<int>(std::floor(s)), 0, n - 2);
      frac[axis] = s - base[axis];
    }
    V3 value{0.0, 0.0, 0.0};
    for (int corner = 0; corner < 8; ++corner) {
      double w = 1.0;
      int idx[3];
      for (int axis = 0; axis < 3; ++axis) {
        const int bit = (corner >> axis) & 1;
        idx[axis] = base[axis] + bit;
        w *= bit ? frac[axis] : 1.0 - frac[axis];
      }
      const std::size_t node = grid.index(idx[0], idx[1], idx[2]);
      for (int c = 0; c < 3; ++c) value[c] += w * d(node, c);
    }
    total += dot(value, normal);
  }
  return total * 4.0 * std::numbers::pi * radius * radius / kFluxPoints;
}

}  // namespace hopflift
