#include "segray/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "segray/errors.hpp"
#include "segray/interval_model.hpp"
#include "segray/sampling.hpp"

namespace segray {

FEval feval_from_scalar(ScalarFieldPtr f) {
  FEval e;
  e.value = [f](const Vec& x, double) { return f->value(x); };
  e.grad = [f](const Vec& x, double) { return f->gradient(x); };
  e.quad_step = 1e-4;
  return e;
}

FEval feval_from_grid(const GridSolution& sol, const std::vector<double>& t_list) {
  auto fields = std::make_shared<std::map<double, LogField2D>>();
  for (double t : t_list) fields->emplace(t, log_field(sol, t));
  auto lookup = [fields](double t) -> const LogField2D& {
    auto it = fields->find(t);
    if (it == fields->end())
      throw TimeMismatch("no log field at t = " + std::to_string(t));
    return it->second;
  };
  FEval e;
  e.value = [lookup](const Vec& x, double t) { return lookup(t).value(x); };
  e.grad = [lookup](const Vec& x, double t) { return lookup(t).grad(x); };
  e.quad_step = sol.grid->h;
  return e;
}

FEval feval_from_eigen(const EigenSolution2D& sol) {
  auto field = std::make_shared<LogField2D>(log_field(sol));
  FEval e;
  e.value = [field](const Vec& x, double) { return field->value(x); };
  e.grad = [field](const Vec& x, double) { return field->grad(x); };
  e.quad_step = sol.grid->h;
  return e;
}

namespace {

double pair_energy_gd(const FEval& f, const Vec& x, const Vec& y, double t) {
  const Vec d = y - x;
  const double r = norm(d);
  const Vec N = (1.0 / r) * d;
  return dot(f.grad(y, t) - f.grad(x, t), N);
}

// Independent quadrature route: integrate the second difference of f along
// the segment.
double pair_energy_quad(const FEval& f, const Vec& x, const Vec& y, double t,
                        const QuadratureRule& rule) {
  const Vec d = y - x;
  const double r = norm(d);
  const Vec N = (1.0 / r) * d;
  const double delta = f.quad_step;
  auto integrand = [&](double s) {
    const Vec p = x + s * N;
    return (f.value(p + delta * N, t) - 2.0 * f.value(p, t) +
            f.value(p - delta * N, t)) /
           (delta * delta);
  };
  return integrate_segment(integrand, r, rule);
}

void finalize(VerificationReport& rep, const VerifyOptions& opt) {
  std::sort(rep.rows.begin(), rep.rows.end(),
            [](const SampleRow& a, const SampleRow& b) { return a.margin < b.margin; });
  rep.min_margin = rep.rows.empty() ? 0.0 : rep.rows.front().margin;
  rep.violations = 0;
  for (const auto& r : rep.rows)
    if (r.margin < -opt.tol_rel * std::max(1.0, std::fabs(r.bound)))
      ++rep.violations;
  rep.pass = rep.violations == 0;
}

std::vector<std::pair<Vec, Vec>> sample_pairs(const ConvexDomain& domain,
                                              const VerifyOptions& opt) {
  const double D = domain.diameter_hint ? *domain.diameter_hint : diameter(domain);
  PointSampler sampler(domain, opt.cutoff * D, opt.seed);
  std::vector<std::pair<Vec, Vec>> pairs;
  pairs.reserve(opt.samples);
  for (int k = 0; k < opt.samples; ++k) pairs.push_back(sampler.draw_pair());
  return pairs;
}

void run_spot_checks(VerificationReport& rep, const FEval& f,
                     const std::vector<std::pair<Vec, Vec>>& pairs,
                     const std::vector<double>& e_gd, double t,
                     const VerifyOptions& opt) {
  if (opt.spot_fraction <= 0) return;
  const std::size_t stride =
      std::max<std::size_t>(1, static_cast<std::size_t>(1.0 / opt.spot_fraction));
  for (std::size_t k = 0; k < pairs.size(); k += stride) {
    SpotCheckRow sc;
    sc.row = k;
    sc.e_gd = e_gd[k];
    sc.e_quad = pair_energy_quad(f, pairs[k].first, pairs[k].second, t, opt.rule);
    sc.delta = std::fabs(sc.e_quad - sc.e_gd);
    rep.max_spot_delta = std::max(rep.max_spot_delta, sc.delta);
    rep.spot_checks.push_back(sc);
  }
}

} // namespace

VerificationReport verify_lower_bound(const FEval& f, const Profile& psi,
                                      double m, const ConvexDomain& domain,
                                      const VerifyOptions& opt) {
  VerificationReport rep;
  rep.seed = opt.seed;
  rep.cutoff = opt.cutoff;
  rep.samples = opt.samples;
  rep.tol_rel = opt.tol_rel;
  rep.label = "lower-bound";

  const auto pairs = sample_pairs(domain, opt);
  for (double t : opt.t_list) {
    std::vector<double> e_gd(pairs.size());
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      const auto& [x, y] = pairs[k];
      const double r = norm(y - x);
      SampleRow row;
      row.x = x;
      row.y = y;
      row.t = t;
      row.r = r;
      row.e_f = pair_energy_gd(f, x, y, t);
      row.bound = m * psi.psi(0.5 * r, t);
      row.margin = row.e_f - row.bound;
      e_gd[k] = row.e_f;
      rep.rows.push_back(row);
    }
    run_spot_checks(rep, f, pairs, e_gd, t, opt);
  }
  finalize(rep, opt);
  return rep;
}

namespace {

// Shared hypothesis + conclusion driver for the comparison corollaries.
VerificationReport comparison_impl(const FEval& f, ScalarFieldPtr q,
                                   ScalarFieldPtr f0,
                                   const Interval1DSolution& model1d,
                                   const ConvexDomain& domain,
                                   const VerifyOptions& opt,
                                   const std::string& label) {
  VerificationReport rep;
  rep.seed = opt.seed;
  rep.cutoff = opt.cutoff;
  rep.samples = opt.samples;
  rep.tol_rel = opt.tol_rel;
  rep.label = label;

  const auto pairs = sample_pairs(domain, opt);

  // Hypothesis: E_q(x,y) >= 2 qbar_s(r/2) on the sample set.
  const Potential1D& qbar = model1d.qbar;
  double hyp_min = 1e300;
  const SampleRow* worst = nullptr;
  std::vector<SampleRow> hyp_rows(pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto& [x, y] = pairs[k];
    const double r = norm(y - x);
    const Vec N = (1.0 / r) * (y - x);
    const double e_q = dot(q->gradient(y) - q->gradient(x), N);
    const double b = 2.0 * qbar.d1(0.5 * r);
    hyp_rows[k] = {x, y, 0.0, r, e_q, b, e_q - b};
    if (e_q - b < hyp_min) {
      hyp_min = e_q - b;
      worst = &hyp_rows[k];
    }
  }
  if (hyp_min < -opt.tol_rel) {
    throw HypothesisViolated(
        "E_q < 2 qbar_s(r/2) by " + std::to_string(-hyp_min) + " at r = " +
        std::to_string(worst ? worst->r : 0.0));
  }
  rep.hypothesis_min_margin = hyp_min;

  // Initial-data hypothesis (parabolic only): E_f(.,.,0) >= 2 fbar_s(r/2, 0).
  if (f0) {
    const LogSlope1D fs0(model1d, 0.0);
    for (const auto& [x, y] : pairs) {
      const double r = norm(y - x);
      const Vec N = (1.0 / r) * (y - x);
      const double e0 = dot(f0->gradient(y) - f0->gradient(x), N);
      const double b = 2.0 * fs0(0.5 * r);
      if (e0 - b < -opt.tol_rel * std::max(1.0, std::fabs(b)))
        throw HypothesisViolated("initial data: E_f(x,y,0) < 2 fbar_s(r/2,0) by " +
                                 std::to_string(b - e0));
      rep.hypothesis_min_margin = std::min(rep.hypothesis_min_margin, e0 - b);
    }
  }

  for (double t : opt.t_list) {
    const LogSlope1D fs(model1d, model1d.eigen_mode ? 0.0 : t);
    std::vector<double> e_gd(pairs.size());
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      const auto& [x, y] = pairs[k];
      const double r = norm(y - x);
      SampleRow row;
      row.x = x;
      row.y = y;
      row.t = t;
      row.r = r;
      row.e_f = pair_energy_gd(f, x, y, t);
      row.bound = 2.0 * fs(0.5 * r);
      row.margin = row.e_f - row.bound;
      e_gd[k] = row.e_f;
      rep.rows.push_back(row);
    }
    run_spot_checks(rep, f, pairs, e_gd, t, opt);
  }
  finalize(rep, opt);
  return rep;
}

} // namespace

VerificationReport verify_comparison_parabolic(
    const GridSolution& solution2d, ScalarFieldPtr q, ScalarFieldPtr f0,
    const Interval1DSolution& model1d, const ConvexDomain& domain,
    const VerifyOptions& opt) {
  const FEval f = feval_from_grid(solution2d, opt.t_list);
  return comparison_impl(f, q, f0, model1d, domain, opt, "comparison-parabolic");
}

VerificationReport verify_comparison_elliptic(const EigenSolution2D& solution2d,
                                              ScalarFieldPtr q,
                                              const Interval1DSolution& model1d,
                                              const ConvexDomain& domain,
                                              const VerifyOptions& opt) {
  const FEval f = feval_from_eigen(solution2d);
  VerifyOptions o = opt;
  o.t_list = {0.0};
  return comparison_impl(f, q, nullptr, model1d, domain, o,
                         "comparison-elliptic");
}

double model_self_margin(const Interval1DSolution& model1d, double t,
                         int samples) {
  const LogSlope1D fs(model1d, t);
  const double smax = fs.s_max();
  double worst = 0;
  for (int k = 1; k <= samples; ++k) {
    const double s = smax * k / (samples + 1);
    const double lhs = fs(s) - fs(-s);  // E_fbar(-s, s)
    const double margin = lhs - 2.0 * fs(s);
    worst = std::max(worst, std::fabs(margin));
  }
  return worst;
}

} // namespace segray
