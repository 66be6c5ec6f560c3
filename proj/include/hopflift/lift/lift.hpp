// Copyright 2026 The hopflift Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "hopflift/common/report.hpp"
#include "hopflift/fields/field.hpp"
#include "hopflift/hopf/hopf.hpp"

namespace hopflift {

// The 12 icosahedral directions followed by +x, -x, +y, -y, +z, -z.
std::vector<S2Point> default_pole_candidates();

// Smallest angular distance from `pole` to the values of u.
double pole_clearance(const SphereMapField& u, const S2Point& pole);

// Candidate farthest from the range of u; ties go to the earlier candidate.
// Throws ChartExhausted if even the best clearance is below delta, and
// InvalidArgument for an empty candidate list.
S2Point select_pole(const SphereMapField& u, const std::vector<S2Point>& candidates,
                    double delta = kDefaultPoleClearance);

struct LiftConfig {
  std::vector<S2Point> candidates = default_pole_candidates();
  double pole_delta = kDefaultPoleClearance;
  // Default 50 h^2.
  std::optional<double> closed_tol;
  // Phase solve; default cap 50 n iterations.
  std::optional<int> max_iters;
  double rel_tol = 1e-10;
};

struct LiftReport {
  S2Point pole_used{{0.0, 0.0, 0.0}};
  double min_pole_distance = 0.0;
  double alpha_closedness = 0.0;  // |curl a| / max(|a|, |curl gauge(section)| / 2)
  double projection_error = 0.0;
  double gauge_error = 0.0;
  double energy_defect = 0.0;
  std::size_t phase_anchor = 0;
  int phase_iterations = 0;
  // Set by verify_lift, which has no pole, closedness or phase solve.
  bool verification_only = false;

  Json to_json() const;
};

struct LiftResult {
  LiftField lift;
  LiftReport report;
};

// Node nearest the origin (lowest index among ties).
std::size_t anchor_node(const Grid3& grid);

// Hopf lift of u whose gauge 2 u_hat^* theta matches eta, with the phase
// pinned to the section's value at the anchor node. Throws ChartExhausted,
// TooCloseToPole, NotClosed, SolverDiverged, NotConverged, GridMismatch.
LiftResult lift(const SphereMapField& u, const VecField& eta, const LiftConfig& cfg = {});

// projection_error = max |h(u_hat) - u|; gauge_error = |2 u_hat^* theta - eta| / |eta|
// (absolute when |eta| < 1e-12); energy_defect = max of the energy identity
// defect over nodes off the cube faces.
LiftReport verify_lift(const SphereMapField& u, const VecField& eta, const LiftField& uhat);

// Standard deviation of arg <a, b> (complex inner product on C^2) about its
// circular mean; zero when b = e^{ic} a.
double phase_spread(const LiftField& a, const LiftField& b);

}  // namespace hopflift
