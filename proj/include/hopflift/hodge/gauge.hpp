// Copyright 2026 The hopflift Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>

#include "hopflift/common/report.hpp"
#include "hopflift/fields/field.hpp"

namespace hopflift {

// Unset entries take the grid-dependent defaults: max_iters = 20 n,
// boundary_penalty = 10 / h.
struct GaugeSolveConfig {
  std::optional<int> max_iters;
  double rel_tol = 1e-8;
  std::optional<double> boundary_penalty;
  double div_penalty = 1.0;
};

struct GaugeReport {
  double curl_residual_rel = 0.0;
  double div_norm = 0.0;
  double normal_trace_norm = 0.0;
  double weak_trace_defect = 0.0;
  int iterations = 0;
  double gradient_rel = 0.0;
  bool converged = false;
  double l32_l1_ratio = 0.0;

  Json to_json() const;
};

struct GaugeResult {
  VecField gauge;
  GaugeReport report;
};

// Raised when the iteration cap is hit; carries the partial solution.
class GaugeNotConverged : public Error {
 public:
  explicit GaugeNotConverged(GaugeResult partial);
  const GaugeResult& partial() const { return partial_; }

 private:
  GaugeResult partial_;
};

// Minimizes |curl a - G|^2 + div_penalty |div a|^2 + boundary_penalty |a.n|^2
// (cube quadrature, face quadrature for the trace) by CGLS from a = 0.
// Throws InvalidArgument for a bad config, SolverDiverged, GaugeNotConverged.
GaugeResult canonical_gauge(const VecField& area_form, const GaugeSolveConfig& cfg = {});

// Surface L2 norm of a.n over the six faces.
double normal_trace_norm(const VecField& a);

// Largest |<a, grad psi>| / (|a| |grad psi|) over a fixed set of smooth psi
// that do not vanish on the boundary. Zero for a = 0.
double weak_trace_defect(const VecField& a);

// Largest |<a, grad psi>| / (|a| |grad psi|) over random smooth psi (seeded
// trigonometric plus quadratic combinations). Zero for a = 0.
double gradient_orthogonality(const VecField& a, int trials, std::uint64_t seed = 7);

// Largest relative norm reduction |a| - min_t |a + t grad psi| over random
// smooth psi, divided by |a|. Zero for a = 0.
double gauge_minimality_check(const VecField& a, int trials, std::uint64_t seed = 7);

// |a|_{L^{3/2}(ball)} / |G|_{L^1(ball)}; zero when G vanishes.
double l32_l1_ratio(const VecField& a, const VecField& area_form);

}  // namespace hopflift
