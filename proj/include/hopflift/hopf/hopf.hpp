// Copyright 2026 The hopflift Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>

#include "hopflift/common/report.hpp"
#include "hopflift/fields/field.hpp"

namespace hopflift {

using Vec3 = std::array<double, 3>;
using Vec4 = std::array<double, 4>;

// Point of S^3 in C^2 coordinates (x1 + i x2, x3 + i x4).
struct S3Point {
  Vec4 x{};
};

struct S2Point {
  Vec3 x{};
};

inline constexpr S2Point kSouthPole{{0.0, 0.0, -1.0}};
inline constexpr double kDefaultPoleClearance = 0.05;

// Unchecked Hopf map (2 conj(z) w, |z|^2 - |w|^2). In this orientation the
// pullback of the area form of S^2 equals 2 d theta.
Vec3 hopf_map(const Vec4& q);

// Hopf map of a unit point. Throws NotUnit if | |q| - 1 | > 1e-9; the
// result is renormalized when its norm drifts by more than 1e-14.
S2Point hopf(const S3Point& q);

// Analytic Jacobian of hopf_map at q (rows: output components).
std::array<Vec4, 3> hopf_jacobian(const Vec4& q);

// theta(v) = -x2 v1 + x1 v2 - x4 v3 + x3 v4, i.e. the inner product with iq.
// Throws NotTangent if |v . q| > 1e-9 * max(1, |v|).
double theta_at(const S3Point& q, const Vec4& v);

// The diagonal S^1 action (z, w) -> (e^{i phi} z, e^{i phi} w).
Vec4 phase_rotate(const Vec4& q, double phi);

// Vertical field iq at q.
Vec4 vertical(const Vec4& q);

// Smooth right inverse of the Hopf map on S^2 minus a pole.
class StereoSection {
 public:
  explicit StereoSection(S2Point pole = kSouthPole, double min_angle = kDefaultPoleClearance);

  const S2Point& pole() const { return pole_; }
  double min_angle() const { return min_angle_; }

  // Throws TooCloseToPole if p is within min_angle of the pole.
  S3Point operator()(const S2Point& p) const;

 private:
  S2Point pole_;
  double min_angle_;
  // SU(2) element (a, b; -conj(b), conj(a)) moving the pole to the south pole.
  std::array<double, 4> su2_{};
};

S3Point stereo_section(const S2Point& p, const S2Point& pole = kSouthPole,
                       double min_angle = kDefaultPoleClearance);

// Angle between two unit vectors, accurate for nearby and antipodal inputs.
double angular_distance(const Vec3& a, const Vec3& b);

// Pointwise identities of the fibration in Hopf coordinates
// (e^{i phi1} sin t, e^{i phi2} cos t): frame orthonormality, dh on the frame,
// h^* omega = 2 d theta on frame pairs and theta on the frame.
// Throws InvalidArgument unless 1e-3 <= t <= pi/2 - 1e-3.
Report frame_checks(double t, double phi1, double phi2);

// frame_checks at `samples` random points; reports the worst defects.
Report frame_check_sweep(int samples, std::uint64_t seed = 20260101);

// h applied nodewise. Throws NotUnit if any node is off the sphere.
SphereMapField project(const LiftField& lift);

// 2 u_hat^* theta from the discrete partials of the lift.
VecField gauge_of_lift(const LiftField& lift);

// |d u_hat|^2 - |eta|^2 / 4 - |du|^2 / 4 nodewise.
ScalarField energy_identity_defect(const LiftField& lift, const SphereMapField& u,
                                   const VecField& eta);

// e^{i phase(x)} u_hat(x) nodewise.
LiftField rotate_phase(const LiftField& lift, const ScalarField& phase);

}  // namespace hopflift
