// Copyright 2026 The hopflift Authors
// SPDX-License-Identifier: Apache-2.0

#include "hopflift/cli/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hopflift/approx/approx.hpp"
#include "hopflift/fields/h3f_io.hpp"
#include "hopflift/hodge/gauge.hpp"
#include "hopflift/hopf/hopf.hpp"
#include "hopflift/lift/lift.hpp"
#include "hopflift/pullback/pullback.hpp"
#include "hopflift/testmaps/testmaps.hpp"

namespace hopflift::cli {
namespace {

namespace fs = std::filesystem;

void write_json(const fs::path& path, const Json& j) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  out << j.dump(2) << '\n';
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

Vec3 to_vec3(const std::vector<double>& v) { return {v[0], v[1], v[2]}; }

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

struct Options {
  bool strict = false;

  // gen
  std::string map;
  int n = 33;
  double t0 = std::numbers::pi / 4;
  std::vector<double> a{1.0, 0.0, 0.0};
  std::vector<double> b{0.0, 1.0, 0.0};
  std::vector<double> point{0.0, 0.0, 1.0};
  std::string planar = "gaussian-bump";

  // shared paths
  std::string in, out, report, vtk, u, eta, uhat, prefix, csv;

  // solver knobs
  std::optional<double> tol;
  std::optional<int> iters;
  std::optional<double> boundary_penalty;
  std::optional<double> div_penalty;
  std::optional<double> closed_tol;
  std::optional<double> pole_delta;

  double eps = 0.0;
  std::vector<double> eps_list;
  int samples = 1000;
  std::uint64_t seed = 20260101;
};

double scale(const Options& o) { return o.strict ? 0.5 : 1.0; }

LiftConfig lift_config(const Options& o, const Grid3& g) {
  LiftConfig cfg;
  cfg.closed_tol = o.closed_tol.value_or(50.0 * g.h() * g.h()) * scale(o);
  cfg.rel_tol = o.tol.value_or(cfg.rel_tol) * scale(o);
  cfg.max_iters = o.iters;
  if (o.pole_delta) cfg.pole_delta = *o.pole_delta;
  return cfg;
}

int cmd_gen(const Options& o) {
  const Grid3 g = make_grid(o.n, 0.0);
  Json side{{"schema_version", kReportSchemaVersion}, {"kind", "gen"}, {"map", o.map}, {"n", o.n}};
  std::vector<std::string> files;
  auto put = [&](const std::string& name, const auto& field) {
    write_h3f(o.prefix + name, field);
    files.push_back(o.prefix + name);
  };
  if (o.map == "constant") {
    const Vec3 p = to_vec3(o.point);
    put("u.h3f", gen_constant(g, S2Point{p}));
    put("eta.h3f", VecField(g, FormDegree::One));
    side["oracle"] = {{"point", p}, {"pullback_norm", 0.0}};
  } else if (o.map == "hedgehog") {
    put("u.h3f", gen_hedgehog(g));
    side["oracle"] = {{"flux", 4.0 * std::numbers::pi}, {"verdict", "singular"}};
  } else if (o.map == "liftfam") {
    const LiftFamily fam = gen_lift_family(g, o.t0, to_vec3(o.a), to_vec3(o.b));
    put("u.h3f", fam.u);
    put("uhat.h3f", fam.lift);
    put("eta.h3f", fam.eta);
    side["oracle"] = fam.oracle.to_json();
  } else if (o.map == "planar") {
    put("u.h3f", gen_planar(g, parse_planar_kind(o.planar)));
    side["oracle"] = {{"planar", o.planar}, {"verdict", "exact"}};
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown map '" + o.map + "'");
  }
  side["files"] = files;
  write_json(o.prefix + "oracle.json", side);
  std::cout << "gen " << o.map << " n=" << o.n << " files=" << files.size() << '\n';
  return kExitOk;
}

int cmd_pullback(const Options& o) {
  const VecField D = pullback_area_form(read_sphere_map(o.in));
  write_h3f(o.out, D);
  if (!o.vtk.empty()) export_vtk(D, o.vtk);
  std::cout << "pullback n=" << D.grid().n() << " -> " << o.out << '\n';
  return kExitOk;
}

int cmd_check(const Options& o) {
  const SphereMapField u = read_sphere_map(o.in);
  const double h = u.grid().h();
  const ExactnessReport r = exactness_defect(u, o.tol.value_or(10.0 * h * h) * scale(o));
  write_json(o.report, r.to_json());
  if (!o.vtk.empty()) export_vtk(r.div_defect, o.vtk);
  std::cout << "check verdict=" << to_string(r.verdict) << " max_interior_div="
            << fmt(r.max_interior_div) << '\n';
  return r.verdict == ExactnessVerdict::Exact ? kExitOk : kExitPrecondition;
}

int cmd_gauge(const Options& o) {
  const VecField G = read_vec_field(o.in);
  GaugeSolveConfig cfg;
  cfg.rel_tol = o.tol.value_or(cfg.rel_tol) * scale(o);
  cfg.max_iters = o.iters;
  cfg.boundary_penalty = o.boundary_penalty;
  if (o.div_penalty) cfg.div_penalty = *o.div_penalty;
  try {
    const GaugeResult r = canonical_gauge(G, cfg);
    write_h3f(o.out, r.gauge);
    write_json(o.report, r.report.to_json());
    std::cout << "gauge iterations=" << r.report.iterations
              << " curl_residual_rel=" << fmt(r.report.curl_residual_rel) << '\n';
  } catch (const GaugeNotConverged& e) {
    write_json(o.report, e.partial().report.to_json());
    throw;
  }
  return kExitOk;
}

int cmd_lift(const Options& o) {
  const SphereMapField u = read_sphere_map(o.u);
  const LiftResult r = lift(u, read_vec_field(o.eta), lift_config(o, u.grid()));
  write_h3f(o.out, r.lift);
  write_json(o.report, r.report.to_json());
  std::cout << "lift gauge_error=" << fmt(r.report.gauge_error)
            << " projection_error=" << fmt(r.report.projection_error) << '\n';
  return kExitOk;
}

int cmd_verify(const Options& o) {
  const LiftReport r =
      verify_lift(read_sphere_map(o.u), read_vec_field(o.eta), read_lift_field(o.uhat));
  write_json(o.report, r.to_json());
  std::cout << "verify gauge_error=" << fmt(r.gauge_error)
            << " projection_error=" << fmt(r.projection_error) << '\n';
  return kExitOk;
}

int cmd_project(const Options& o) {
  const SphereMapField u = project(read_lift_field(o.in));
  write_h3f(o.out, u);
  std::cout << "project n=" << u.grid().n() << " -> " << o.out << '\n';
  return kExitOk;
}

int cmd_gauge_of_lift(const Options& o) {
  const VecField eta = gauge_of_lift(read_lift_field(o.in));
  write_h3f(o.out, eta);
  std::cout << "gauge-of-lift n=" << eta.grid().n() << " -> " << o.out << '\n';
  return kExitOk;
}

int cmd_approx(const Options& o) {
  const SphereMapField u = read_sphere_map(o.u);
  const ApproxResult r = approximate(u, read_vec_field(o.eta), o.eps, lift_config(o, u.grid()));
  write_h3f(o.prefix + "u.h3f", r.u);
  write_h3f(o.prefix + "eta.h3f", r.eta);
  write_h3f(o.prefix + "uhat.h3f", r.lift);
  write_json(o.prefix + "report.json", r.report.to_json());
  std::cout << "approx eps=" << o.eps
            << " constraint_residual=" << fmt(r.report.metric("constraint_residual"))
            << " u_distance_w12=" << fmt(r.report.metric("u_distance_w12")) << '\n';
  return kExitOk;
}

int cmd_sweep(const Options& o) {
  const SphereMapField u = read_sphere_map(o.u);
  const auto rows =
      convergence_sweep(u, read_vec_field(o.eta), o.eps_list, lift_config(o, u.grid()));
  const std::string csv = sweep_csv(rows);
  if (o.csv.empty()) {
    std::cout << csv;
  } else {
    write_text(o.csv, csv);
  }
  std::cout << "sweep rows=" << rows.size() << '\n';
  return kExitOk;
}

int cmd_frame_check(const Options& o) {
  const Report sweep = frame_check_sweep(o.samples, o.seed);
  Report r("frame_check");
  r.set("samples", o.samples);
  const double worst = sweep.metric("max_defect");
  r.check("max_defect", worst, o.tol.value_or(1e-9) * scale(o));
  write_json(o.report, r.to_json());
  std::cout << "frame-check samples=" << o.samples << " max_defect=" << fmt(worst)
            << (r.passed() ? " pass" : " FAIL") << '\n';
  return r.passed() ? kExitOk : kExitPrecondition;
}

int cmd_selftest(const Options& o) {
  const Report r = selftest({o.n, o.strict});
  write_json(o.report, r.to_json());
  int failed = 0;
  for (const auto& c : r.checks()) failed += c.pass ? 0 : 1;
  std::cout << "selftest n=" << o.n << " checks=" << r.checks().size() << " failed=" << failed
            << '\n';
  return r.passed() ? kExitOk : kExitSelftestFailed;
}

}  // namespace

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::SolverDiverged:
    case ErrorCode::NotConverged:
      return kExitSolver;
    default:
      return kExitPrecondition;
  }
}

int run(int argc, const char* const* argv) {
  Options o;
  CLI::App app{"Hopf lifts of sphere-valued maps on the unit ball", "hopflift"};
  app.require_subcommand(1);
  app.add_flag("--strict", o.strict, "halve all default tolerances");

  auto sub = [&](const char* name, const char* desc) {
    CLI::App* s = app.add_subcommand(name, desc);
    s->fallthrough();
    return s;
  };

  CLI::App* gen = sub("gen", "write an analytic test map");
  gen->add_option("--map", o.map, "constant|hedgehog|liftfam|planar")->required();
  gen->add_option("--n", o.n, "nodes per axis");
  gen->add_option("--t0", o.t0, "latitude of the lift family");
  gen->add_option("--a", o.a, "first phase wave vector")->delimiter(',')->expected(3);
  gen->add_option("--b", o.b, "second phase wave vector")->delimiter(',')->expected(3);
  gen->add_option("--point", o.point, "value of the constant map")->delimiter(',')->expected(3);
  gen->add_option("--planar", o.planar, "gaussian-bump|linear-winding");
  gen->add_option("--out-prefix", o.prefix, "output file prefix");

  CLI::App* pull = sub("pullback", "pullback area form D(u)");
  pull->add_option("--in", o.in)->required();
  pull->add_option("--out", o.out)->required();
  pull->add_option("--vtk", o.vtk);

  CLI::App* check = sub("check", "exactness verdict from div D(u) and sphere fluxes");
  check->add_option("--in", o.in)->required();
  check->add_option("--report", o.report);
  check->add_option("--tol", o.tol);
  check->add_option("--vtk", o.vtk, "divergence defect");

  CLI::App* gauge = sub("gauge", "canonical gauge for a 2-form");
  gauge->add_option("--in", o.in)->required();
  gauge->add_option("--out", o.out)->required();
  gauge->add_option("--report", o.report);
  gauge->add_option("--tol", o.tol, "relative gradient tolerance");
  gauge->add_option("--iters", o.iters);
  gauge->add_option("--boundary-penalty", o.boundary_penalty);
  gauge->add_option("--div-penalty", o.div_penalty);

  auto lift_knobs = [&](CLI::App* s) {
    s->add_option("--tol", o.tol, "phase solve relative tolerance");
    s->add_option("--iters", o.iters, "phase solve iteration cap");
    s->add_option("--closed-tol", o.closed_tol);
    s->add_option("--pole-delta", o.pole_delta);
  };

  CLI::App* lft = sub("lift", "Hopf lift of (u, eta)");
  lft->add_option("--u", o.u)->required();
  lft->add_option("--eta", o.eta)->required();
  lft->add_option("--out", o.out)->required();
  lft->add_option("--report", o.report);
  lift_knobs(lft);

  CLI::App* verify = sub("verify", "check a given lift against (u, eta)");
  verify->add_option("--u", o.u)->required();
  verify->add_option("--eta", o.eta)->required();
  verify->add_option("--uhat", o.uhat)->required();
  verify->add_option("--report", o.report);

  CLI::App* proj = sub("project", "apply the Hopf map nodewise");
  proj->add_option("--in", o.in)->required();
  proj->add_option("--out", o.out)->required();

  CLI::App* gol = sub("gauge-of-lift", "gauge 2 uhat^* theta of a lift");
  gol->add_option("--in", o.in)->required();
  gol->add_option("--out", o.out)->required();

  CLI::App* apx = sub("approx", "smooth constrained approximant");
  apx->add_option("--u", o.u)->required();
  apx->add_option("--eta", o.eta)->required();
  apx->add_option("--eps", o.eps)->required();
  apx->add_option("--out-prefix", o.prefix);
  lift_knobs(apx);

  CLI::App* swp = sub("sweep", "approximation distances over decreasing widths");
  swp->add_option("--u", o.u)->required();
  swp->add_option("--eta", o.eta)->required();
  swp->add_option("--eps", o.eps_list)->delimiter(',')->required();
  swp->add_option("--csv", o.csv, "output file (stdout if omitted)");
  lift_knobs(swp);

  CLI::App* frame = sub("frame-check", "Hopf frame identities at random points");
  frame->add_option("--samples", o.samples);
  frame->add_option("--seed", o.seed);
  frame->add_option("--report", o.report);
  frame->add_option("--tol", o.tol);

  CLI::App* self = sub("selftest", "invariant suite on analytic maps");
  self->add_option("--n", o.n);
  self->add_option("--report", o.report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) return cmd_gen(o);
    if (*pull) return cmd_pullback(o);
    if (*check) return cmd_check(o);
    if (*gauge) return cmd_gauge(o);
    if (*lft) return cmd_lift(o);
    if (*verify) return cmd_verify(o);
    if (*proj) return cmd_project(o);
    if (*gol) return cmd_gauge_of_lift(o);
    if (*apx) return cmd_approx(o);
    if (*swp) return cmd_sweep(o);
    if (*frame) return cmd_frame_check(o);
    return cmd_selftest(o);
  } catch (const Error& e) {
    std::cerr << "hopflift: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
}

}  // namespace hopflift::cli
