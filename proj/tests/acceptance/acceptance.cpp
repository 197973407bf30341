// Acceptance suite: every release gate in one binary, one PASS/FAIL line per
// criterion, nonzero exit on any failure.  Tolerances are pinned here, not
// configurable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "runner.hpp"
#include "segray/bound.hpp"
#include "segray/boundary_probe.hpp"
#include "segray/errors.hpp"
#include "segray/grid2d.hpp"
#include "segray/interval_model.hpp"
#include "segray/log_field.hpp"
#include "segray/ray_energy.hpp"
#include "segray/sampling.hpp"
#include "segray/verify.hpp"

using namespace segray;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

void report(int criterion, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion,
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

std::vector<std::pair<Vec, Vec>> disc_pairs(int count, std::uint64_t seed,
                                            double min_r) {
  const ConvexDomain disc = make_disc(1.0);
  PointSampler sampler(disc, 0.0, seed);
  std::vector<std::pair<Vec, Vec>> pairs;
  for (int k = 0; k < count; ++k) pairs.push_back(sampler.draw_pair(min_r));
  return pairs;
}

std::vector<TensorFieldPtr> families() {
  return {
      make_constant_tensor(SymMat::identity(2)),
      make_conformal_tensor(make_polynomial(2, {{1.0, {1, 1, 0}}})),
      make_hessian_tensor(make_polynomial(2, {{1.0, {4, 0, 0}}, {1.0, {0, 2, 0}}})),
      make_conformal_tensor(make_plane_wave(Vec(1.3, 0.7), 1.0, 0.4)),
  };
}

// ---------------------------------------------------------------- criterion 1

void criterion1() {
  Timer timer;
  QuadratureRule rule;
  rule.panels = 4;
  rule.nodes_per_panel = 12;
  const auto pairs = disc_pairs(100, 1001, 0.15);

  double max_rel = 0;
  bool suites_ok = true;
  for (const auto& tau : families()) {
    const IdentitySuiteResult res = identity_suite(*tau, pairs, rule, 2e-3, 1e-5);
    suites_ok = suites_ok && res.pass;
    max_rel = std::max(max_rel, res.max_rel_err);
  }

  // Raw-FD convergence slopes for the first-order identities at the pinned
  // step ladder; identities that are exactly linear in h sit at the roundoff
  // floor and are accepted as converged.
  const std::vector<double> ladder = {1e-3, 5e-4, 2.5e-4};
  double worst_slope = 1e300;
  for (const auto& tau : families()) {
    for (int k = 0; k < 25; ++k) {
      const auto& [x, y] = pairs[k * 4];
      const SegmentFrame frame = segment_frame(x, y);
      for (const auto& id : applicable_identities(2)) {
        if (id.kind == IdentityId::Thm24 || id.kind == IdentityId::Thm25)
          continue;
        const double rhs = identity_rhs(id, *tau, frame, rule);
        std::vector<double> errs;
        for (double h : ladder)
          errs.push_back(std::fabs(identity_fd_raw(id, *tau, frame, rule, h) - rhs));
        if (oracles::below_noise_floor(errs, 1e-11 * std::max(1.0, std::fabs(rhs))))
          continue;
        worst_slope = std::min(worst_slope, oracles::richardson_slope(errs));
      }
    }
  }

  // Lemma 2.1 on the same pair set: Richardson-extrapolated residuals of
  // every identity plus convergence slopes of the curved ones.
  double lemma_max = 0, lemma_slope = 1e300;
  for (int k = 0; k < 100; ++k) {
    const SegmentFrame frame = segment_frame(pairs[k].first, pairs[k].second);
    const double h = 1e-3;
    const Lemma21Report rep_h = lemma21_check(frame, h);
    const Lemma21Report rep_h2 = lemma21_check(frame, 0.5 * h);
    for (std::size_t j = 0; j < rep_h.residuals.size(); ++j) {
      const auto& a = rep_h.residuals[j];
      const auto& b = rep_h2.residuals[j];
      const double extrapolated = (4.0 * b.fd - a.fd) / 3.0;
      const double rel = std::fabs(extrapolated - a.formula) /
                         std::max(1.0, std::fabs(a.formula));
      lemma_max = std::max(lemma_max, rel);
    }
    std::vector<double> eN, eT;
    for (double hh : ladder) {
      const Lemma21Report rep = lemma21_check(frame, hh);
      eN.push_back(rep.max_abs_err(2, "N"));
      eT.push_back(rep.max_abs_err(2, "theta"));
    }
    if (!oracles::below_noise_floor(eN, 1e-11))
      lemma_slope = std::min(lemma_slope, oracles::richardson_slope(eN));
    if (!oracles::below_noise_floor(eT, 1e-11))
      lemma_slope = std::min(lemma_slope, oracles::richardson_slope(eT));
  }

  const double secs = timer.seconds();
  const bool pass = suites_ok && max_rel < 1e-5 && worst_slope >= 1.9 &&
                    lemma_slope >= 1.9 && lemma_max < 1e-5 && secs < 60.0;
  std::ostringstream d;
  d << "identity suites (4 families x 100 pairs): max rel_err " << max_rel
    << ", worst slope " << worst_slope << ", lemma21 extrapolated rel "
    << lemma_max << ", lemma21 slope " << lemma_slope << ", " << secs << " s";
  report(1, pass, d.str());
}

// ---------------------------------------------------------------- criterion 2

void criterion2() {
  Timer timer;
  QuadratureRule rule;
  rule.panels = 8;
  rule.nodes_per_panel = 12;
  rule.adaptive = true;
  rule.refine_tol = 1e-13;

  const auto pairs = disc_pairs(1000, 2002, 0.05);
  const auto id = make_constant_tensor(SymMat::identity(2));
  double worst_r = 0;
  for (const auto& [x, y] : pairs)
    worst_r = std::max(worst_r, std::fabs(energy(*id, x, y, rule) - norm(y - x)));

  const auto f = make_polynomial(2, {{1.0, {4, 0, 0}}, {1.0, {0, 2, 0}}});
  const auto tau = make_hessian_tensor(f);
  double worst_gd = 0;
  for (const auto& [x, y] : pairs) {
    const double eq = energy(*tau, x, y, rule);
    const double eg = energy_by_gradient_difference(
        [&](const Vec& p) { return f->gradient(p); }, x, y);
    worst_gd = std::max(worst_gd, std::fabs(eq - eg));
  }

  const double secs = timer.seconds();
  const bool pass = worst_r < 1e-12 && worst_gd < 1e-8 && secs < 10.0;
  std::ostringstream d;
  d << "energy oracles: |E - r| " << worst_r << ", quad-vs-gradient "
    << worst_gd << " on 1000 pairs, " << secs << " s";
  report(2, pass, d.str());
}

// ---------------------------------------------------------------- criterion 3

void criterion3() {
  Timer timer;
  const Interval1DSolution interval =
      solve_1d_model_eigen(make_zero_potential1d(), M_PI_2, 2000);
  const double err_1d = std::fabs(*interval.lambda - 1.0);

  const auto disc = std::make_shared<ConvexDomain>(make_disc(1.0));
  const EigenSolution2D sol =
      solve_eigen_2d(build_operator(build_grid(disc, 0.01), *make_zero_field(2)));
  const double lam_oracle = oracles::disc_lambda1();
  const double rel_disc = std::fabs(sol.lambda - lam_oracle) / lam_oracle;

  const double secs = timer.seconds();
  const bool pass = err_1d < 1e-4 && rel_disc < 0.01 && secs < 120.0;
  std::ostringstream d;
  d << "eigen: interval |lambda-1| " << err_1d << ", disc lambda "
    << sol.lambda << " vs " << lam_oracle << " (rel " << rel_disc << "), "
    << secs << " s";
  report(3, pass, d.str());
}

// ---------------------------------------------------------------- criterion 4

void criterion4() {
  Timer timer;
  // psi = s + s^3, phi_mod = 0, D = 2.  Closed-form oracle: the quotient is
  // 6 / ((1+3s^2)(1+s^2)), strictly decreasing, minimum 3/4 at s = 1.
  const auto psi = make_polynomial_profile({0.0, 1.0, 0.0, 1.0}, 1.0);
  const MResult par = compute_m_parabolic(*psi, make_zero_modulus(), 1e6);
  const MResult ell = compute_m_elliptic(*psi, make_zero_modulus());
  const double brute = oracles::brute_m_scan(
      [](double s) { return s + s * s * s; },
      [](double s) { return 1.0 + 3.0 * s * s; },
      [](double s) { return 6.0 * s; }, [](double) { return 0.0; }, 2e-3, 1.0,
      400000);

  const double err_closed = std::fabs(par.m - 0.75);
  const double err_brute = std::fabs(par.m - brute);
  const double err_consistency = std::fabs(par.m - ell.m);
  // Limit branch: psi_sss(0)/psi_s(0)^2 = 6 below eps_limit.
  const double limit_val = m_quotient(*psi, make_zero_modulus(), 1e-4, 0.0);
  const double err_limit = std::fabs(limit_val - 6.0);

  const double secs = timer.seconds();
  const bool pass = err_closed < 1e-8 && err_brute < 1e-7 &&
                    err_consistency < 1e-12 && err_limit < 1e-6;
  std::ostringstream d;
  d << "m-formula: m " << par.m << " (closed-form err " << err_closed
    << ", brute err " << err_brute << "), elliptic-parabolic "
    << err_consistency << ", limit err " << err_limit << ", " << secs << " s";
  report(4, pass, d.str());
}

// ---------------------------------------------------------------- criterion 5

void criterion5() {
  Timer timer;
  const auto disc = std::make_shared<ConvexDomain>(make_disc(1.0));
  const EigenSolution2D sol =
      solve_eigen_2d(build_operator(build_grid(disc, 0.01), *make_zero_field(2)));
  const Interval1DSolution model =
      solve_1d_model_eigen(make_zero_potential1d(), 1.0, 2001);

  VerifyOptions opt;
  opt.samples = 10000;
  opt.cutoff = 0.02;
  opt.seed = 5005;
  const VerificationReport rep =
      verify_comparison_elliptic(sol, make_zero_field(2), model, *disc, opt);

  const double self = model_self_margin(model, 0.0);
  const double secs = timer.seconds();
  const bool pass = rep.min_margin >= -1e-2 && self < 1e-8 && secs < 300.0;
  std::ostringstream d;
  d << "elliptic comparison: min margin " << rep.min_margin << " over "
    << rep.rows.size() << " rows, sharpness witness " << self << ", " << secs
    << " s";
  report(5, pass, d.str());
}

// ---------------------------------------------------------------- criterion 6

void criterion6() {
  Timer timer;
  const auto disc = std::make_shared<ConvexDomain>(make_disc(1.0));
  const std::vector<double> t_list = {0.05, 0.1, 0.2};

  const Operator2D op = build_operator(build_grid(disc, 0.015),
                                       *make_zero_field(2));
  const GridSolution sol = solve_heat_2d(
      op, [](const Vec& x) { return std::exp(-dot(x, x)); }, 1e-3, 0.2,
      Scheme::CrankNicolson, t_list);

  Model1DOptions mopt;
  mopt.nodes = 2001;
  mopt.dt = 1e-3;
  mopt.t_end = 0.2;
  mopt.store_times = t_list;
  const Interval1DSolution model = solve_1d_model_heat(
      make_zero_potential1d(), 1.0, [](double s) { return std::exp(-s * s); },
      mopt);

  VerifyOptions opt;
  opt.samples = 1000;
  opt.cutoff = 0.02;
  opt.seed = 6006;
  opt.t_list = t_list;

  bool pass = true;
  double min_margin = 1e300, hyp = 0;
  std::string err;
  try {
    const auto f0 = make_polynomial(2, {{1.0, {2, 0, 0}}, {1.0, {0, 2, 0}}});
    const VerificationReport rep = verify_comparison_parabolic(
        sol, make_zero_field(2), f0, model, *disc, opt);
    min_margin = rep.min_margin;
    hyp = rep.hypothesis_min_margin;
    pass = rep.min_margin >= -1e-2;
  } catch (const Error& e) {
    pass = false;
    err = e.name();
  }

  const double secs = timer.seconds();
  pass = pass && secs < 600.0;
  std::ostringstream d;
  d << "parabolic comparison at t = {0.05, 0.1, 0.2}: min margin " << min_margin
    << ", hypothesis margin " << hyp;
  if (!err.empty()) d << ", error " << err;
  d << ", " << secs << " s";
  report(6, pass, d.str());
}

// ---------------------------------------------------------------- criterion 7

void criterion7() {
  Timer timer;
  const auto disc = std::make_shared<ConvexDomain>(make_disc(1.0));
  const ProbeField f =
      probe_field_from_scalar(std::make_shared<NegLogDomainField>(disc));
  ProbeOptions opt;

  const auto c1 = boundary_probe(*disc, f, ProbeMode::Case1, opt);
  const auto c3 = boundary_probe(*disc, f, ProbeMode::Case3, opt);
  const auto c4 = boundary_probe(*disc, f, ProbeMode::Case4, opt);
  const auto c5 = boundary_probe(*disc, f, ProbeMode::Case5, opt);
  const auto scan = boundary_probe(*disc, f, ProbeMode::Lemma31, opt);
  ProbeOptions halved = opt;
  halved.probe_distance *= 0.5;
  const auto scan2 = boundary_probe(*disc, f, ProbeMode::Lemma31, halved);

  // Closed-form oracle for the case-1 sequence; st.r is the exact segment
  // length from the center.
  double oracle_err = 0;
  for (const auto& st : c1.steps) {
    oracle_err = std::max(
        oracle_err,
        std::fabs(st.e_f - oracles::disc_neglog_axis_energy(0, st.r)) /
            std::max(1.0, st.e_f));
  }

  const bool pass_seq = c1.monotone_tail && c1.final_value > 10.0 &&
                        c3.monotone_tail && c3.final_value > 10.0 &&
                        c5.monotone_tail && c5.final_ratio > 1e3 &&
                        c4.tail_min >= -1e-6;
  const bool pass_scan =
      scan.c0_empirical > 0 &&
      std::fabs(scan2.c0_empirical - scan.c0_empirical) <= 0.2 * scan.c0_empirical;
  const bool pass = pass_seq && pass_scan && oracle_err < 1e-8;

  std::ostringstream d;
  d << "boundary laws: case1 final " << c1.final_value << ", case5 ratio "
    << c5.final_ratio << ", case4 tail " << c4.tail_min << ", c0 "
    << scan.c0_empirical << " (halved " << scan2.c0_empirical
    << "), oracle err " << oracle_err << ", " << timer.seconds() << " s";
  report(7, pass, d.str());
}

// ---------------------------------------------------------------- criterion 8

void criterion8() {
  Timer timer;
  const fs::path base = fs::temp_directory_path() / "segray_acceptance";
  fs::remove_all(base);
  fs::create_directories(base);

  auto write_cfg = [&](const std::string& name, const std::string& text) {
    const fs::path p = base / name;
    std::ofstream f(p);
    f << text;
    return p.string();
  };
  auto slurp = [](const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
  };
  auto twice_identical = [&](const std::string& experiment,
                             const std::string& cfg_path,
                             const std::string& report_name) {
    cli::RunRequest req;
    req.experiment = experiment;
    req.config_path = cfg_path;
    req.out_dir = (base / (experiment + "_1")).string();
    const int rc1 = cli::run(req);
    req.out_dir = (base / (experiment + "_2")).string();
    const int rc2 = cli::run(req);
    if (rc1 != rc2 || rc1 == 2) return false;
    return slurp(base / (experiment + "_1") / report_name) ==
           slurp(base / (experiment + "_2") / report_name);
  };

  const std::string ident_cfg = write_cfg("ident.cfg", R"(
[domain]
kind = disc
[tensor]
kind = hessian
dim = 2
fn = poly
term = 1.0 4 0
term = 1.0 0 2
[identities]
pairs = 25
h = 0.002
[sampling]
seed = 8080
)");
  const std::string m_cfg = write_cfg("m.cfg", R"(
[profile]
kind = poly
coeffs = 0, 1, 0, 1
d = 2.0
[m]
mode = parabolic
m0 = 1e6
)");
  const std::string ve_cfg = write_cfg("ve.cfg", R"(
[domain]
kind = disc
[grid]
h = 0.05
[model]
nodes = 501
[sampling]
count = 200
seed = 8081
cutoff = 0.08
)");

  const bool ok1 = twice_identical("check-identities", ident_cfg, "identity_report.csv");
  const bool ok2 = twice_identical("compute-m", m_cfg, "m_quotient.csv");
  const bool ok3 = twice_identical("verify-elliptic", ve_cfg, "verify_elliptic_report.csv");

  const bool pass = ok1 && ok2 && ok3;
  std::ostringstream d;
  d << "reproducibility: check-identities " << (ok1 ? "ok" : "DIFFERS")
    << ", compute-m " << (ok2 ? "ok" : "DIFFERS") << ", verify-elliptic "
    << (ok3 ? "ok" : "DIFFERS") << ", " << timer.seconds() << " s";
  report(8, pass, d.str());
}

} // namespace

int main() {
  std::printf("segray acceptance suite\n");
  try {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
  } catch (const std::exception& e) {
    std::printf("[FAIL] unexpected exception: %s\n", e.what());
    ++g_failures;
  }
  std::printf("%s (%d failure%s)\n", g_failures == 0 ? "ALL PASS" : "FAILURES",
              g_failures, g_failures == 1 ? "" : "s");
  return g_failures == 0 ? 0 : 1;
}
