// Copyright 2026 The hopflift Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <numbers>

#include "hopflift/approx/approx.hpp"
#include "hopflift/cli/cli.hpp"
#include "hopflift/fields/operators.hpp"
#include "hopflift/fields/quadrature.hpp"
#include "hopflift/hodge/gauge.hpp"
#include "hopflift/hopf/hopf.hpp"
#include "hopflift/lift/lift.hpp"
#include "hopflift/pullback/pullback.hpp"
#include "hopflift/testmaps/testmaps.hpp"

namespace hopflift::cli {
namespace {

double interior_max(const ScalarField& f) {
  double worst = 0.0;
  for (std::size_t node = 0; node < f.size(); ++node) {
    if (f.grid().boundary_layer(node) >= 1) worst = std::max(worst, std::abs(f(node, 0)));
  }
  return worst;
}

}  // namespace

Report selftest(const SelftestOptions& opt) {
  const double s = opt.strict ? 0.5 : 1.0;
  const Grid3 g = make_grid(opt.n, 0.0);
  const double h = g.h();
  Report rep("selftest");
  rep.set("n", opt.n);
  rep.set("strict", opt.strict ? 1.0 : 0.0);

  const Report frames = frame_check_sweep(1000);
  rep.check("frame_checks", frames.metric("max_defect"), s * 1e-9);

  const LiftFamily fam = gen_lift_family(g, 0.6, {1.0, 0.5, 0.0}, {0.0, 1.0, -0.5});
  rep.check("family_energy_identity",
            interior_max(energy_identity_defect(fam.lift, fam.u, fam.eta)), s * 2.0 * h * h);
  rep.check("family_gauge_consistency",
            l2_norm(combine(1.0, gauge_of_lift(fam.lift), -1.0, fam.eta)) / l2_norm(fam.eta),
            s * h * h);

  const LiftResult lifted = lift(fam.u, fam.eta);
  rep.check("lift_projection_error", lifted.report.projection_error, s * 1e-10);
  rep.check("lift_gauge_error", lifted.report.gauge_error, s * h * h);
  rep.check("lift_phase_spread", phase_spread(lifted.lift, fam.lift), s * h * h);

  const SphereMapField hedgehog = gen_hedgehog(g);
  const SphereMapField planar = gen_planar(g, PlanarKind::GaussianBump);
  const SphereMapField winding = gen_planar(g, PlanarKind::LinearWinding);
  double identities = 0.0;
  for (const SphereMapField* u : {&fam.u, &hedgehog, &planar, &winding}) {
    const Report r = pointwise_identities(*u);
    identities = std::max(
        {identities, r.metric("norm_identity_defect"), r.metric("amgm_violation")});
  }
  rep.check("pointwise_identities", identities, s * 1e-10);

  const ExactnessReport fam_exact = exactness_defect(fam.u);
  rep.check("family_verdict_exact", fam_exact.verdict == ExactnessVerdict::Exact ? 0.0 : 1.0, 0.0);
  const ExactnessReport hog_exact = exactness_defect(hedgehog);
  rep.check("hedgehog_verdict_singular",
            hog_exact.verdict == ExactnessVerdict::Singular ? 0.0 : 1.0, 0.0);
  double flux_error = 0.0;
  for (const auto& [radius, flux] : hog_exact.flux_by_radius) {
    flux_error = std::max(flux_error, std::abs(flux / (4.0 * std::numbers::pi) - 1.0));
  }
  rep.check("hedgehog_flux", flux_error, s * 0.1);

  const GaugeBump bump = gen_gauge_bump(g);
  const VecField a0 = star(curl(bump.potential));
  GaugeSolveConfig gcfg;
  gcfg.rel_tol *= s;
  const GaugeResult gauge = canonical_gauge(curl(a0), gcfg);
  rep.check("gauge_recovery",
            l2_norm(combine(1.0, gauge.gauge, -1.0, a0)) / l2_norm(a0), s * 1e-6);
  rep.check("gauge_orthogonality", gradient_orthogonality(gauge.gauge, 20), s * 1e-6);
  rep.check("gauge_minimality", gauge_minimality_check(gauge.gauge, 20), s * 1e-6);

  const ApproxResult ap = approximate_with_lift(fam.u, fam.eta, lifted, 2.0 * h);
  rep.check("approx_unit_defect", ap.report.metric("unit_defect"), s * 1e-12);
  rep.check("approx_constraint_residual", ap.report.metric("constraint_residual"),
            s * 1e-8);
  return rep;
}

}  // namespace hopflift::cli
