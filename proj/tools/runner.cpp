#include "runner.hpp"

#include <cmath>
#include <filesystem>
#include <json.hpp>

#include "config.hpp"
#include "segray/bound.hpp"
#include "segray/boundary_probe.hpp"
#include "segray/errors.hpp"
#include "segray/kernel_check.hpp"
#include "segray/report_io.hpp"
#include "segray/sampling.hpp"
#include "segray/verify.hpp"

namespace segray::cli {

namespace {

using json = nlohmann::ordered_json;

double positive(double v, const char* what) {
  if (!(v > 0)) throw ConfigInvalid(std::string(what) + " must be positive");
  return v;
}

int positive(int v, const char* what) {
  if (v <= 0) throw ConfigInvalid(std::string(what) + " must be positive");
  return v;
}

struct Ctx {
  ConfigFile file;
  RunMeta meta;
  std::string out_dir;
  std::string experiment;

  std::string path(const std::string& name) const {
    return (std::filesystem::path(out_dir) / name).string();
  }
  json base_summary() const {
    json j;
    j["experiment"] = experiment;
    j["config_hash"] = meta.config_hash;
    j["seed"] = meta.seed;
    return j;
  }
  void write_summary(json j) const {
    write_text_file(path(experiment + "_summary.json"), j.dump(2) + "\n");
  }
};

json verification_summary(const VerificationReport& rep) {
  json j;
  j["label"] = rep.label;
  j["samples"] = rep.samples;
  j["cutoff"] = rep.cutoff;
  j["min_margin"] = rep.min_margin;
  j["violations"] = rep.violations;
  j["tol_rel"] = rep.tol_rel;
  j["max_spot_delta"] = rep.max_spot_delta;
  j["hypothesis_min_margin"] = rep.hypothesis_min_margin;
  j["indicative"] = rep.indicative;
  j["pass"] = rep.pass;
  return j;
}

void emit_margin_series(const Ctx& ctx, const VerificationReport& rep) {
  margin_scatter_csv(rep, ctx.meta).write(ctx.path("margin_vs_r.csv"));
}

// ------------------------------------------------------------ experiments

bool run_check_identities(const Ctx& ctx, ConfigCursor& c) {
  auto domain = domain_from_config(c);
  auto tau = tensor_from_config(c);
  QuadratureRule rule = quadrature_from_config(c);
  const int pairs_n = positive(c.get_int("identities", "pairs", 100), "[identities] pairs");
  const double h = positive(c.get_double("identities", "h", 2e-3), "[identities] h");
  const double tol = c.get_double("identities", "tol", 1e-5);
  const double min_r = c.get_double("identities", "min_r", 0.1);
  c.finish();

  PointSampler sampler(*domain, 0.0, ctx.meta.seed);
  std::vector<std::pair<Vec, Vec>> pairs;
  for (int k = 0; k < pairs_n; ++k) pairs.push_back(sampler.draw_pair(min_r));

  const IdentitySuiteResult res = identity_suite(*tau, pairs, rule, h, tol);
  identity_suite_csv(res, ctx.meta).write(ctx.path("identity_report.csv"));

  json j = ctx.base_summary();
  j["pairs"] = pairs_n;
  j["h"] = h;
  j["tol"] = tol;
  j["max_rel_err"] = res.max_rel_err;
  j["pass"] = res.pass;
  ctx.write_summary(j);
  return res.pass;
}

bool run_probe_boundary(const Ctx& ctx, ConfigCursor& c) {
  auto domain = domain_from_config(c);
  const ProbeMode mode =
      probe_mode_from_string(c.get_string("probe", "mode", "case1"));
  ProbeOptions opt;
  opt.steps = c.get_int("probe", "steps", 12);
  opt.rays = c.get_int("probe", "rays", 64);
  opt.depth_levels = c.get_int("probe", "depth_levels", 8);
  opt.probe_distance = c.get_double("probe", "probe_distance", 0.05);
  const double escape = c.get_double("probe", "escape_threshold", 10.0);
  const double ratio_thr = c.get_double("probe", "ratio_threshold", 1e3);
  c.finish();

  const ProbeField f =
      probe_field_from_scalar(std::make_shared<NegLogDomainField>(domain));
  const BoundarySequenceReport rep = boundary_probe(*domain, f, mode, opt);
  probe_sequence_csv(rep, ctx.meta).write(ctx.path("probe_sequence.csv"));

  bool pass = true;
  switch (mode) {
    case ProbeMode::Case1:
    case ProbeMode::Case2:
    case ProbeMode::Case3:
      pass = rep.monotone_tail && rep.final_value > escape;
      break;
    case ProbeMode::Case4:
      pass = rep.tail_min >= -1e-6;
      break;
    case ProbeMode::Case5:
      pass = rep.monotone_tail && rep.final_ratio > ratio_thr;
      break;
    case ProbeMode::Lemma31:
      pass = rep.c0_empirical > 0;
      break;
  }

  json j = ctx.base_summary();
  j["mode"] = probe_mode_name(mode);
  j["final_value"] = rep.final_value;
  j["final_ratio"] = rep.final_ratio;
  j["monotone_tail"] = rep.monotone_tail;
  j["tail_min"] = rep.tail_min;
  j["tail_slope"] = rep.tail_slope;
  j["c0_empirical"] = rep.c0_empirical;
  j["delta0_empirical"] = rep.delta0_empirical;
  j["pass"] = pass;
  ctx.write_summary(j);
  return pass;
}

std::string time_tag(double t) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", t);
  return buf;
}

bool run_solve_heat(const Ctx& ctx, ConfigCursor& c) {
  auto domain = domain_from_config(c);
  auto q = potential_from_config(c, domain->dimension);
  const double h = positive(c.get_double("grid", "h", 0.02), "[grid] h");
  const double dt = positive(c.get_double("grid", "dt", 1e-3), "[grid] dt");
  const double t_end = positive(c.get_double("grid", "t_end", 0.1), "[grid] t_end");
  const auto t_list =
      c.get_double_list("grid", "t_list", std::vector<double>{t_end});
  const std::string scheme_str =
      c.get_string("grid", "scheme", "crank-nicolson");
  const Scheme scheme = scheme_str == "implicit-euler" ? Scheme::ImplicitEuler
                                                       : Scheme::CrankNicolson;
  const double coeff = c.get_double("initial", "coeff", 1.0);
  const auto center =
      c.get_double_list("initial", "center", std::vector<double>{0.0, 0.0});
  c.finish();

  const Vec z(center[0], center[1]);
  const Operator2D op = build_operator(domain, *q, h);
  const GridSolution sol = solve_heat_2d(
      op, [&](const Vec& x) { return std::exp(-coeff * dot(x - z, x - z)); },
      dt, t_end, scheme, t_list);

  for (std::size_t k = 0; k < sol.series.times.size(); ++k) {
    CsvTable t;
    t.comments = ctx.meta.comment_lines();
    t.comments.push_back("t=" + format_double(sol.series.times[k]));
    t.columns = {"x1", "x2", "u"};
    for (int i = 0; i < sol.grid->interior_count(); ++i) {
      const Vec p = sol.grid->point(i);
      t.add_row({format_double(p[0]), format_double(p[1]),
                 format_double(sol.series.states[k][i])});
    }
    t.write(ctx.path("heat_t" + time_tag(sol.series.times[k]) + ".csv"));
  }

  json j = ctx.base_summary();
  j["h"] = h;
  j["dt"] = dt;
  j["t_end"] = t_end;
  j["scheme_used"] = scheme_name(sol.series.scheme_used);
  j["fallback_applied"] = sol.series.fallback_applied;
  j["min_value"] = sol.series.min_value;
  j["interior_cells"] = sol.grid->interior_count();
  j["pass"] = true;
  ctx.write_summary(j);
  return true;
}

bool run_solve_eigen(const Ctx& ctx, ConfigCursor& c) {
  const std::string kind = c.get_string("domain", "kind", "disc");
  json j = ctx.base_summary();

  if (kind == "interval") {
    const double length = c.get_double("domain", "length", M_PI);
    const int nodes = positive(c.get_int("model", "nodes", 2001), "[model] nodes");
    Potential1D qbar = qbar_from_config(c);
    c.finish();
    const Interval1DSolution sol =
        solve_1d_model_eigen(qbar, 0.5 * length, nodes);

    CsvTable t;
    t.comments = ctx.meta.comment_lines();
    t.columns = {"s", "phi"};
    for (int i = 0; i < sol.grid.m; ++i)
      t.add_row({format_double(sol.grid.node(i)),
                 format_double(sol.series.states[0][i])});
    t.write(ctx.path("eigen.csv"));

    j["lambda1"] = *sol.lambda;
    j["nodes"] = nodes;
    j["pass"] = true;
    ctx.write_summary(j);
    return true;
  }

  auto domain = domain_from_config(c);
  auto q = potential_from_config(c, domain->dimension);
  const double h = c.get_double("grid", "h", 0.02);
  c.finish();

  const EigenSolution2D sol = solve_eigen_2d(build_operator(domain, *q, h));
  CsvTable t;
  t.comments = ctx.meta.comment_lines();
  t.columns = {"x1", "x2", "phi"};
  for (int i = 0; i < sol.grid->interior_count(); ++i) {
    const Vec p = sol.grid->point(i);
    t.add_row({format_double(p[0]), format_double(p[1]),
               format_double(sol.phi[i])});
  }
  t.write(ctx.path("eigen.csv"));

  j["lambda1"] = sol.lambda;
  j["iterations"] = sol.iterations;
  j["residual"] = sol.residual;
  j["interior_cells"] = sol.grid->interior_count();
  j["pass"] = true;
  ctx.write_summary(j);
  return true;
}

bool run_compute_m(const Ctx& ctx, ConfigCursor& c) {
  ProfilePtr psi = profile_from_config(c);
  const std::string mod_kind = c.get_string("modulus", "kind", "zero");
  PotentialModulus mod;
  if (mod_kind == "zero") mod = make_zero_modulus();
  else if (mod_kind == "qbar_slope") mod = make_qbar_slope_modulus(qbar_from_config(c));
  else throw UnknownKind("[modulus] kind: " + mod_kind);

  const std::string mode = c.get_string("m", "mode", "elliptic");
  MGrid grid;
  grid.s_samples = c.get_int("m", "s_samples", 128);
  grid.t_samples = c.get_int("m", "t_samples", 16);
  const double m0 = c.get_double("m", "m0", 1e300);
  c.finish();

  MResult res;
  if (mode == "parabolic") res = compute_m_parabolic(*psi, mod, m0, grid);
  else res = compute_m_elliptic(*psi, mod, grid);

  // Quotient curve series.
  std::vector<std::array<double, 3>> curve;
  const int ns = std::max(grid.s_samples, 64);
  for (int i = 0; i < ns; ++i) {
    const double s = psi->s_max() * i / (ns - 1.0);
    curve.push_back({s, 0.0, m_quotient(*psi, mod, s, 0.0)});
  }
  m_quotient_csv(curve, ctx.meta).write(ctx.path("m_quotient.csv"));

  json j = ctx.base_summary();
  j["mode"] = mode;
  j["m"] = res.m;
  j["s_argmin"] = res.s_argmin;
  j["t_argmin"] = res.t_argmin;
  j["clamped_by_m0"] = res.clamped_by_m0;
  j["limit_branch"] = res.limit_branch;
  j["pass"] = true;
  ctx.write_summary(j);
  return true;
}

VerifyOptions verify_options_from_config(const Ctx& ctx, ConfigCursor& c) {
  VerifyOptions opt;
  opt.samples = positive(c.get_int("sampling", "count", 10000), "[sampling] count");
  opt.cutoff = c.get_double("sampling", "cutoff", 0.02);
  opt.seed = ctx.meta.seed;
  opt.tol_rel = c.get_double("sampling", "tol_rel", 1e-3);
  opt.spot_fraction = c.get_double("sampling", "spot_fraction", 0.01);
  opt.rule = quadrature_from_config(c);
  return opt;
}

bool run_verify_elliptic(const Ctx& ctx, ConfigCursor& c) {
  auto domain = domain_from_config(c);
  auto q = potential_from_config(c, domain->dimension);
  const double h = positive(c.get_double("grid", "h", 0.02), "[grid] h");
  const int nodes = positive(c.get_int("model", "nodes", 2001), "[model] nodes");
  Potential1D qbar = qbar_from_config(c);
  VerifyOptions opt = verify_options_from_config(ctx, c);
  c.finish();

  const double D = domain->diameter_hint ? *domain->diameter_hint : diameter(*domain);
  const EigenSolution2D sol = solve_eigen_2d(build_operator(domain, *q, h));
  const Interval1DSolution model = solve_1d_model_eigen(qbar, 0.5 * D, nodes);

  const VerificationReport rep =
      verify_comparison_elliptic(sol, q, model, *domain, opt);
  verification_csv(rep, ctx.meta).write(ctx.path("verify_elliptic_report.csv"));
  emit_margin_series(ctx, rep);

  json j = ctx.base_summary();
  j["lambda1_2d"] = sol.lambda;
  j["lambda1_model"] = *model.lambda;
  j["report"] = verification_summary(rep);
  j["pass"] = rep.pass;
  ctx.write_summary(j);
  return rep.pass;
}

bool run_verify_parabolic(const Ctx& ctx, ConfigCursor& c) {
  auto domain = domain_from_config(c);
  auto q = potential_from_config(c, domain->dimension);
  const double h = positive(c.get_double("grid", "h", 0.02), "[grid] h");
  const double dt = positive(c.get_double("grid", "dt", 1e-3), "[grid] dt");
  const auto t_list = c.get_double_list("grid", "t_list",
                                        std::vector<double>{0.05, 0.1, 0.2});
  const int nodes = positive(c.get_int("model", "nodes", 2001), "[model] nodes");
  Potential1D qbar = qbar_from_config(c);
  const double coeff = positive(c.get_double("initial", "coeff", 1.0), "[initial] coeff");
  VerifyOptions opt = verify_options_from_config(ctx, c);
  opt.t_list = t_list;
  c.finish();

  const double D = domain->diameter_hint ? *domain->diameter_hint : diameter(*domain);
  double t_end = 0;
  for (double t : t_list) t_end = std::max(t_end, t);

  const Operator2D op = build_operator(domain, *q, h);
  const GridSolution sol = solve_heat_2d(
      op, [&](const Vec& x) { return std::exp(-coeff * dot(x, x)); }, dt, t_end,
      Scheme::CrankNicolson, t_list);

  Model1DOptions mopt;
  mopt.nodes = nodes;
  mopt.dt = dt;
  mopt.t_end = t_end;
  mopt.store_times = t_list;
  const Interval1DSolution model = solve_1d_model_heat(
      qbar, 0.5 * D, [&](double s) { return std::exp(-coeff * s * s); }, mopt);

  // f0 = coeff |x|^2 is the analytic -log of the initial data.
  std::vector<PolyTerm> f0_terms = {{coeff, {2, 0, 0}}, {coeff, {0, 2, 0}}};
  auto f0 = make_polynomial(2, f0_terms);

  const VerificationReport rep =
      verify_comparison_parabolic(sol, q, f0, model, *domain, opt);
  verification_csv(rep, ctx.meta).write(ctx.path("verify_parabolic_report.csv"));
  emit_margin_series(ctx, rep);

  json j = ctx.base_summary();
  j["scheme_used"] = scheme_name(sol.series.scheme_used);
  j["report"] = verification_summary(rep);
  j["pass"] = rep.pass;
  ctx.write_summary(j);
  return rep.pass;
}

bool run_kernel_spot_check(const Ctx& ctx, ConfigCursor& c) {
  auto domain = domain_from_config(c);
  auto q = potential_from_config(c, domain->dimension);
  KernelCheckOptions opt;
  opt.width = positive(c.get_double("kernel", "width", 0.06), "[kernel] width");
  opt.grid_h = positive(c.get_double("grid", "h", 0.02), "[grid] h");
  opt.dt = positive(c.get_double("grid", "dt", 1e-3), "[grid] dt");
  opt.t_list = c.get_double_list("kernel", "t_list", std::vector<double>{0.3});
  opt.model_nodes = positive(c.get_int("model", "nodes", 2001), "[model] nodes");
  Potential1D qbar = qbar_from_config(c);
  const auto center =
      c.get_double_list("kernel", "center", std::vector<double>{0.0, 0.0});
  opt.verify = verify_options_from_config(ctx, c);
  c.finish();

  const VerificationReport rep = heat_kernel_spot_check(
      domain, q, Vec(center[0], center[1]), qbar, opt);
  verification_csv(rep, ctx.meta).write(ctx.path("kernel_spot_check_report.csv"));
  emit_margin_series(ctx, rep);

  json j = ctx.base_summary();
  j["indicative"] = true;
  j["report"] = verification_summary(rep);
  j["pass"] = true;  // informational, never a gate
  ctx.write_summary(j);
  return true;
}

} // namespace

int run(const RunRequest& req) {
  Ctx ctx;
  ctx.experiment = req.experiment;
  ctx.out_dir = req.out_dir;
  try {
    std::filesystem::create_directories(ctx.out_dir);
    ctx.file = ConfigFile::parse_file(req.config_path);
    ConfigCursor cursor(ctx.file);

    // [run] experiment, when present, must match the subcommand.
    if (cursor.has("run", "experiment")) {
      const std::string k = cursor.get_string("run", "experiment");
      if (k != req.experiment)
        throw ConfigInvalid("[run] experiment = " + k +
                            " does not match subcommand " + req.experiment);
    }
    std::uint64_t seed = static_cast<std::uint64_t>(
        cursor.get_int("sampling", "seed", 12345));
    if (req.seed_override) seed = *req.seed_override;
    ctx.meta.seed = seed;
    ctx.meta.config_hash = hash_hex(fnv1a64(ctx.file.raw));

    bool pass = false;
    if (req.experiment == "check-identities") pass = run_check_identities(ctx, cursor);
    else if (req.experiment == "probe-boundary") pass = run_probe_boundary(ctx, cursor);
    else if (req.experiment == "solve-heat") pass = run_solve_heat(ctx, cursor);
    else if (req.experiment == "solve-eigen") pass = run_solve_eigen(ctx, cursor);
    else if (req.experiment == "compute-m") pass = run_compute_m(ctx, cursor);
    else if (req.experiment == "verify-elliptic") pass = run_verify_elliptic(ctx, cursor);
    else if (req.experiment == "verify-parabolic") pass = run_verify_parabolic(ctx, cursor);
    else if (req.experiment == "kernel-spot-check") pass = run_kernel_spot_check(ctx, cursor);
    else throw ConfigInvalid("unknown experiment: " + req.experiment);

    return pass ? 0 : 1;
  } catch (const Error& e) {
    json j = ctx.base_summary();
    j["pass"] = false;
    j["error"] = e.name();
    j["message"] = e.what();
    try {
      ctx.write_summary(j);
    } catch (...) {
    }
    return 2;
  } catch (const std::exception& e) {
    json j = ctx.base_summary();
    j["pass"] = false;
    j["error"] = "InternalError";
    j["message"] = e.what();
    try {
      ctx.write_summary(j);
    } catch (...) {
    }
    return 2;
  }
}

} // namespace segray::cli
