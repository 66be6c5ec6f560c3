// Copyright 2026 The hopflift Authors
// SPDX-License-Identifier: Apache-2.0

#include "hopflift/hopf/hopf.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "hopflift/fields/operators.hpp"

namespace hopflift {

namespace {

using Complex = std::complex<double>;

double norm4(const Vec4& v) {
  return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3]);
}
double dot4(const Vec4& a, const Vec4& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}
double norm3(const Vec3& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }
double dot3(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Vec3 apply(const std::array<Vec4, 3>& jac, const Vec4& v) {
  return {dot4(jac[0], v), dot4(jac[1], v), dot4(jac[2], v)};
}

// The helpers below invert (z, w) -> (2 z conj(w), |z|^2 - |w|^2), the
// mirror image of hopf_map through the xz-plane.

// Lift over the south-pole chart: z = sqrt((1 + p3) / 2) real,
// w = (p1 - i p2) / (2 z). Singular only at p = (0, 0, -1).
Vec4 south_chart_lift(const Vec3& p) {
  const double z = std::sqrt(0.5 * (1.0 + p[2]));
  const double scale = 1.0 / (2.0 * z);
  Vec4 q{z, 0.0, p[0] * scale, -p[1] * scale};
  const double nrm = norm4(q);
  for (double& c : q) c /= nrm;
  return q;
}

// Rotation of S^2 induced by U = (a, b; -conj(b), conj(a)): h(U v) = R_U h(v).
// Uses 2 v v^* - I = [[p3, p1 + i p2], [p1 - i p2, -p3]].
Vec3 rotate_by(const Complex& a, const Complex& b, const Vec3& p) {
  const Complex m00(p[2], 0.0), m01(p[0], p[1]), m10(p[0], -p[1]), m11(-p[2], 0.0);
  const Complex u00 = a, u01 = b, u10 = -std::conj(b), u11 = std::conj(a);
  // T = U M
  const Complex t00 = u00 * m00 + u01 * m10, t01 = u00 * m01 + u01 * m11;
  const Complex t10 = u10 * m00 + u11 * m10;
  // (T U^*)_{00} and (T U^*)_{01}
  const Complex r00 = t00 * std::conj(u00) + t01 * std::conj(u01);
  const Complex r01 = t00 * std::conj(u10) + t01 * std::conj(u11);
  (void)t10;
  return {r01.real(), r01.imag(), r00.real()};
}

// U^* applied to (z, w).
Vec3 mirror_y(const Vec3& p) { return {p[0], -p[1], p[2]}; }

Vec4 apply_adjoint(const Complex& a, const Complex& b, const Vec4& q) {
  const Complex z(q[0], q[1]), w(q[2], q[3]);
  // U^* = (conj(a), -b; conj(b), a)
  const Complex z2 = std::conj(a) * z - b * w;
  const Complex w2 = std::conj(b) * z + a * w;
  return {z2.real(), z2.imag(), w2.real(), w2.imag()};
}

}  // namespace

Vec3 hopf_map(const Vec4& q) {
  const Complex z(q[0], q[1]), w(q[2], q[3]);
  const Complex zw = 2.0 * std::conj(z) * w;
  return {zw.real(), zw.imag(), std::norm(z) - std::norm(w)};
}

S2Point hopf(const S3Point& q) {
  const double nrm = norm4(q.x);
  if (!(std::abs(nrm - 1.0) <= 1e-9)) {
    throw Error(ErrorCode::NotUnit, "S^3 point has norm " + std::to_string(nrm));
  }
  Vec3 p = hopf_map(q.x);
  const double pn = norm3(p);
  if (std::abs(pn - 1.0) > 1e-14) {
    for (double& c : p) c /= pn;
  }
  return S2Point{p};
}

std::array<Vec4, 3> hopf_jacobian(const Vec4& q) {
  const double x1 = q[0], x2 = q[1], x3 = q[2], x4 = q[3];
  return {Vec4{2 * x3, 2 * x4, 2 * x1, 2 * x2}, Vec4{2 * x4, -2 * x3, -2 * x2, 2 * x1},
          Vec4{2 * x1, 2 * x2, -2 * x3, -2 * x4}};
}

double theta_at(const S3Point& q, const Vec4& v) {
  const double normal = dot4(q.x, v);
  if (!(std::abs(normal) <= 1e-9 * std::max(1.0, norm4(v)))) {
    throw Error(ErrorCode::NotTangent, "vector is not tangent to S^3 (v.q = " +
                                           std::to_string(normal) + ")");
  }
  return dot4(vertical(q.x), v);
}

Vec4 vertical(const Vec4& q) { return {-q[1], q[0], -q[3], q[2]}; }

Vec4 phase_rotate(const Vec4& q, double phi) {
  const double c = std::cos(phi), s = std::sin(phi);
  return {c * q[0] - s * q[1], s * q[0] + c * q[1], c * q[2] - s * q[3], s * q[2] + c * q[3]};
}

double angular_distance(const Vec3& a, const Vec3& b) {
  return std::atan2(norm3(cross(a, b)), dot3(a, b));
}

StereoSection::StereoSection(S2Point pole, double min_angle)
    : pole_(pole), min_angle_(min_angle) {
  const double pn = norm3(pole_.x);
  if (!(std::abs(pn - 1.0) <= 1e-9)) {
    throw Error(ErrorCode::NotUnit, "pole is not a unit vector");
  }
  // q_pole is a mirrored-chart lift of the pole; M = (z, -conj(w); w, conj(z)) maps (1,0)
  // to q_pole, and J = (0, -1; 1, 0) maps (1,0) to (0,1) = lift of south.
  // U = J M^* then sends q_pole to (0,1).
  const Vec3 mirrored = mirror_y(pole_.x);
  Vec4 qp = mirrored[2] > -1.0 + 1e-12 ? south_chart_lift(mirrored) : Vec4{0.0, 0.0, 1.0, 0.0};
  const Complex z(qp[0], qp[1]), w(qp[2], qp[3]);
  // M^* = (conj(z), conj(w); -w, z); J M^* = (w, -z; conj(z), conj(w)).
  const Complex a = w;
  const Complex b = -z;
  su2_ = {a.real(), a.imag(), b.real(), b.imag()};
}

S3Point StereoSection::operator()(const S2Point& p) const {
  if (angular_distance(p.x, pole_.x) < min_angle_) {
    throw Error(ErrorCode::TooCloseToPole, "point lies within " + std::to_string(min_angle_) +
                                               " rad of the section pole");
  }
  const Complex a(su2_[0], su2_[1]), b(su2_[2], su2_[3]);
  const Vec3 moved = rotate_by(a, b, mirror_y(p.x));
  return S3Point{apply_adjoint(a, b, south_chart_lift(moved))};
}

S3Point stereo_section(const S2Point& p, const S2Point& pole, double min_angle) {
  return StereoSection(pole, min_angle)(p);
}

Report frame_checks(double t, double phi1, double phi2) {
  if (!(t >= 1e-3 && t <= std::numbers::pi / 2 - 1e-3)) {
    throw Error(ErrorCode::InvalidArgument, "Hopf latitude must stay 1e-3 away from 0 and pi/2");
  }
  const double st = std::sin(t), ct = std::cos(t);
  const double c1 = std::cos(phi1), s1 = std::sin(phi1);
  const double c2 = std::cos(phi2), s2 = std::sin(phi2);
  const Vec4 q{st * c1, st * s1, ct * c2, ct * s2};

  const Vec4 d_phi1{-st * s1, st * c1, 0.0, 0.0};
  const Vec4 d_phi2{0.0, 0.0, -ct * s2, ct * c2};
  const Vec4 d_t{ct * c1, ct * s1, -st * c2, -st * s2};
  const double cot = ct / st, tan = st / ct;
  const std::array<Vec4, 3> tau = {
      Vec4{d_phi1[0] + d_phi2[0], d_phi1[1] + d_phi2[1], d_phi1[2] + d_phi2[2],
           d_phi1[3] + d_phi2[3]},
      d_t,
      Vec4{cot * d_phi1[0] - tan * d_phi2[0], cot * d_phi1[1] - tan * d_phi2[1],
           cot * d_phi1[2] - tan * d_phi2[2], cot * d_phi1[3] - tan * d_phi2[3]}};

  Report r("frame_checks");
  r.set("t", t);
  r.set("phi1", phi1);
  r.set("phi2", phi2);

  double orth = 0.0, tangency = 0.0;
  for (int a = 0; a < 3; ++a) {
    tangency = std::max(tangency, std::abs(dot4(tau[a], q)));
    for (int b = 0; b < 3; ++b) {
      orth = std::max(orth, std::abs(dot4(tau[a], tau[b]) - (a == b ? 1.0 : 0.0)));
    }
  }
  r.set("frame_orthonormality", orth);
  r.set("frame_tangency", tangency);

  // Image point and coordinate vectors of (e^{i phi} sin 2t, -cos 2t).
  const double phi = phi2 - phi1;
  const double s2t = std::sin(2 * t), c2t = std::cos(2 * t);
  const Vec3 p = hopf_map(q);
  const Vec3 p_expected{s2t * std::cos(phi), s2t * std::sin(phi), -c2t};
  const Vec3 dp_dt{2 * c2t * std::cos(phi), 2 * c2t * std::sin(phi), 2 * s2t};
  const Vec3 dp_dphi{-s2t * std::sin(phi), s2t * std::cos(phi), 0.0};
  r.set("hopf_coordinates", norm3({p[0] - p_expected[0], p[1] - p_expected[1],
                                   p[2] - p_expected[2]}));

  const auto jac = hopf_jacobian(q);
  const std::array<Vec3, 3> image = {apply(jac, tau[0]), apply(jac, tau[1]), apply(jac, tau[2])};
  r.set("dh_tau1", norm3(image[0]));
  r.set("dh_tau2_norm", std::abs(norm3(image[1]) - 2.0));
  r.set("dh_tau3_norm", std::abs(norm3(image[2]) - 2.0));
  r.set("dh_tau2_tau3_orthogonality", std::abs(dot3(image[1], image[2])));
  r.set("dh_tau2_vs_d_t", norm3({image[1][0] - dp_dt[0], image[1][1] - dp_dt[1],
                                 image[1][2] - dp_dt[2]}));
  const double k = -2.0 / s2t;
  r.set("dh_tau3_vs_d_phi", norm3({image[2][0] - k * dp_dphi[0], image[2][1] - k * dp_dphi[1],
                                   image[2][2] - k * dp_dphi[2]}));

  // h^* omega(ta, tb) = h(q) . (dh ta x dh tb) against 4 (dx1^dx2 + dx3^dx4).
  double area = 0.0;
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) {
      const double pulled = dot3(p, cross(image[a], image[b]));
      const Vec4& u = tau[a];
      const Vec4& v = tau[b];
      const double two_dtheta = 4.0 * (u[0] * v[1] - u[1] * v[0] + u[2] * v[3] - u[3] * v[2]);
      area = std::max(area, std::abs(pulled - two_dtheta));
    }
  }
  r.set("pullback_area_vs_2dtheta", area);

  const S3Point qp{q};
  r.set("theta_tau1", std::abs(theta_at(qp, tau[0]) - 1.0));
  r.set("theta_tau2", std::abs(theta_at(qp, tau[1])));
  r.set("theta_tau3", std::abs(theta_at(qp, tau[2])));

  double worst = 0.0;
  for (const auto& [key, value] : r.metrics()) {
    if (key != "t" && key != "phi1" && key != "phi2") worst = std::max(worst, value);
  }
  r.set("max_defect", worst);
  r.check("max_defect", worst, 1e-10);
  return r;
}

Report frame_check_sweep(int samples, std::uint64_t seed) {
  if (samples < 1) throw Error(ErrorCode::InvalidArgument, "need at least one sample");
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> latitude(1e-3, std::numbers::pi / 2 - 1e-3);
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  Report sweep("frame_check_sweep");
  sweep.set("samples", samples);
  double worst = 0.0;
  std::vector<std::pair<std::string, double>> per_metric;
  for (int s = 0; s < samples; ++s) {
    const double t = latitude(gen);
    const double p1 = angle(gen);
    const double p2 = angle(gen);
    const Report r = frame_checks(t, p1, p2);
    for (const auto& [key, value] : r.metrics()) {
      if (key == "t" || key == "phi1" || key == "phi2" || key == "max_defect") continue;
      const double prev = sweep.has(key) ? sweep.metric(key) : 0.0;
      sweep.set(key, std::max(prev, value));
    }
    worst = std::max(worst, r.metric("max_defect"));
  }
  sweep.set("max_defect", worst);
  sweep.check("max_defect", worst, 1e-9);
  return sweep;
}

SphereMapField project(const LiftField& lift) {
  SphereMapField u(lift.grid());
  for (std::size_t node = 0; node < lift.size(); ++node) {
    const S2Point p = hopf(S3Point{lift.at(node)});
    u.set(node, p.x);
  }
  return u;
}

VecField gauge_of_lift(const LiftField& lift) {
  const Partials d = partials(lift.grid(), lift.values(), 4);
  VecField eta(lift.grid(), FormDegree::One);
  for (std::size_t node = 0; node < lift.size(); ++node) {
    const Vec4 q = lift.at(node);
    for (int axis = 0; axis < 3; ++axis) {
      eta(node, axis) = 2.0 * (-q[1] * d(axis, node, 0) + q[0] * d(axis, node, 1) -
                               q[3] * d(axis, node, 2) + q[2] * d(axis, node, 3));
    }
  }
  return eta;
}

ScalarField energy_identity_defect(const LiftField& lift, const SphereMapField& u,
                                   const VecField& eta) {
  require_same_grid(lift.grid(), u.grid());
  require_same_grid(lift.grid(), eta.grid());
  const Partials dl = partials(lift.grid(), lift.values(), 4);
  const Partials du = partials(u.grid(), u.values(), 3);
  ScalarField out(lift.grid());
  for (std::size_t node = 0; node < lift.size(); ++node) {
    double lift_energy = 0.0, map_energy = 0.0, gauge_energy = 0.0;
    for (int axis = 0; axis < 3; ++axis) {
      for (int c = 0; c < 4; ++c) lift_energy += dl(axis, node, c) * dl(axis, node, c);
      for (int c = 0; c < 3; ++c) map_energy += du(axis, node, c) * du(axis, node, c);
      gauge_energy += eta(node, axis) * eta(node, axis);
    }
    out(node, 0) = lift_energy - 0.25 * gauge_energy - 0.25 * map_energy;
  }
  return out;
}

LiftField rotate_phase(const LiftField& lift, const ScalarField& phase) {
  require_same_grid(lift.grid(), phase.grid());
  LiftField out(lift.grid());
  for (std::size_t node = 0; node < lift.size(); ++node) {
    out.set(node, phase_rotate(lift.at(node), phase(node, 0)));
  }
  return out;
}

}  // namespace hopflift
