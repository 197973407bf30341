#include "segray/profile.hpp"

#include <cmath>

#include "segray/errors.hpp"

namespace segray {

namespace {

class AnalyticProfile : public Profile {
public:
  AnalyticProfile(std::function<double(double)> p, std::function<double(double)> ps,
                  std::function<double(double)> pss,
                  std::function<double(double)> psss, double s_max)
      : p_(std::move(p)), ps_(std::move(ps)), pss_(std::move(pss)),
        psss_(std::move(psss)), s_max_(s_max) {}
  double psi(double s, double) const override { return p_(s); }
  double psi_s(double s, double) const override { return ps_(s); }
  double psi_ss(double s, double) const override { return pss_(s); }
  double psi_sss(double s, double) const override { return psss_(s); }
  double psi_t(double, double) const override { return 0.0; }
  double s_max() const override { return s_max_; }
  double t_max() const override { return 0.0; }
  bool time_dependent() const override { return false; }
  std::string source() const override { return "analytic"; }

private:
  std::function<double(double)> p_, ps_, pss_, psss_;
  double s_max_;
};

class EigenModelProfile : public Profile {
public:
  EigenModelProfile(const Interval1DSolution& sol)
      : slope_(sol, 0.0), qbar_(sol.qbar), lambda_(*sol.lambda),
        s_max_(slope_.s_max()) {}

  double fbar_s(double s) const { return slope_(s); }
  double fbar_ss(double s) const {
    const double fs = slope_(s);
    return lambda_ - qbar_.value(s) + fs * fs;
  }
  double fbar_sss(double s) const {
    return -qbar_.d1(s) + 2.0 * slope_(s) * fbar_ss(s);
  }
  double fbar_ssss(double s) const {
    const double fss = fbar_ss(s);
    return -qbar_.d2(s) + 2.0 * fss * fss + 2.0 * slope_(s) * fbar_sss(s);
  }

  double psi(double s, double) const override { return 2.0 * fbar_s(s); }
  double psi_s(double s, double) const override { return 2.0 * fbar_ss(s); }
  double psi_ss(double s, double) const override { return 2.0 * fbar_sss(s); }
  double psi_sss(double s, double) const override { return 2.0 * fbar_ssss(s); }
  double psi_t(double, double) const override { return 0.0; }
  double s_max() const override { return s_max_; }
  double t_max() const override { return 0.0; }
  bool time_dependent() const override { return false; }
  std::string source() const override { return "from-1d-model"; }

private:
  LogSlope1D slope_;
  Potential1D qbar_;
  double lambda_;
  double s_max_;
};

// Parabolic model profile.  fbar_s and fbar_ss come from node stencils at the
// stored times; fbar_t via the heat identity fbar_t = fbar_ss - fbar_s^2 +
// qbar, and mixed derivatives by differentiating that identity in s, so only
// spatial stencils appear.  The model problem is even by construction, so the
// snapshot is symmetrized before differencing: this removes solver roundoff
// asymmetry that the odd high-order stencils at s = 0 would amplify by 1/h^3.
class HeatModelProfile : public Profile {
public:
  explicit HeatModelProfile(std::shared_ptr<const Interval1DSolution> sol)
      : sol_(std::move(sol)) {
    for (double t : sol_->series.times) t_max_ = std::max(t_max_, t);
    const IntervalGrid& g = sol_->grid;
    s_max_ = g.L - 5.0 * g.h;
  }

  double psi(double s, double t) const override { return 2.0 * deriv(t, s, 1); }
  double psi_s(double s, double t) const override { return 2.0 * deriv(t, s, 2); }
  double psi_ss(double s, double t) const override { return 2.0 * deriv(t, s, 3); }
  double psi_sss(double s, double t) const override { return 2.0 * deriv(t, s, 4); }
  double psi_t(double s, double t) const override {
    // fbar_st = fbar_sss - 2 fbar_s fbar_ss + qbar_s
    const double fs = deriv(t, s, 1);
    const double fss = deriv(t, s, 2);
    const double fsss = deriv(t, s, 3);
    return 2.0 * (fsss - 2.0 * fs * fss + sol_->qbar.d1(s));
  }
  double s_max() const override { return s_max_; }
  double t_max() const override { return t_max_; }
  bool time_dependent() const override { return true; }
  std::string source() const override { return "from-1d-model"; }

private:
  const std::vector<double>& fbar(double t) const {
    for (std::size_t k = 0; k < cache_t_.size(); ++k)
      if (cache_t_[k] == t) return cache_[k];

    // Bracket t between stored snapshots and blend the states linearly; the
    // profile is then defined on all of [0, t_max].
    const auto& times = sol_->series.times;
    std::size_t hi = 0;
    while (hi + 1 < times.size() && times[hi] < t) ++hi;
    const std::size_t lo = hi > 0 && times[hi] > t ? hi - 1 : hi;
    const double span = times[hi] - times[lo];
    const double w = span > 0 ? std::clamp((t - times[lo]) / span, 0.0, 1.0) : 0.0;

    const Eigen::VectorXd& ua = sol_->series.states[lo];
    const Eigen::VectorXd& ub = sol_->series.states[hi];
    const int m = sol_->grid.m;
    std::vector<double> f(m);
    for (int j = 0; j < m; ++j) {
      const double here = (1.0 - w) * ua[j] + w * ub[j];
      const double mirror = (1.0 - w) * ua[m - 1 - j] + w * ub[m - 1 - j];
      const double sym = 0.5 * (here + mirror);
      if (sym <= 1e-300)
        throw NonPositiveValue("heat model profile: value at or below floor");
      f[j] = -std::log(sym);
    }
    cache_t_.push_back(t);
    cache_.push_back(std::move(f));
    return cache_.back();
  }

  double stencil(const std::vector<double>& f, int j, int order) const {
    auto fb = [&](int i) { return f[static_cast<std::size_t>(i)]; };
    const double h = sol_->grid.h;
    switch (order) {
      case 1:
        return (fb(j - 2) - 8 * fb(j - 1) + 8 * fb(j + 1) - fb(j + 2)) /
               (12.0 * h);
      case 2:
        return (-fb(j - 2) + 16 * fb(j - 1) - 30 * fb(j) + 16 * fb(j + 1) -
                fb(j + 2)) /
               (12.0 * h * h);
      case 3:
        return (-fb(j - 2) + 2 * fb(j - 1) - 2 * fb(j + 1) + fb(j + 2)) /
               (2.0 * h * h * h);
      default:
        return (fb(j - 2) - 4 * fb(j - 1) + 6 * fb(j) - 4 * fb(j + 1) +
                fb(j + 2)) /
               (h * h * h * h);
    }
  }

  // order-th s-derivative of the symmetrized fbar: centered node stencils,
  // linearly interpolated between nodes (odd symmetry at s = 0 is then exact
  // for any node parity).
  double deriv(double t, double s, int order) const {
    const IntervalGrid& g = sol_->grid;
    const std::vector<double>& f = fbar(t);
    int j = static_cast<int>(std::floor((s - g.node(0)) / g.h));
    j = std::max(2, std::min(g.m - 4, j));
    const double w = (s - g.node(j)) / g.h;
    return (1.0 - w) * stencil(f, j, order) + w * stencil(f, j + 1, order);
  }

  std::shared_ptr<const Interval1DSolution> sol_;
  double s_max_ = 0, t_max_ = 0;
  mutable std::vector<double> cache_t_;
  mutable std::vector<std::vector<double>> cache_;
};

} // namespace

ProfilePtr make_analytic_profile(std::function<double(double)> psi,
                                 std::function<double(double)> psi_s,
                                 std::function<double(double)> psi_ss,
                                 std::function<double(double)> psi_sss,
                                 double s_max) {
  return std::make_shared<AnalyticProfile>(std::move(psi), std::move(psi_s),
                                           std::move(psi_ss), std::move(psi_sss),
                                           s_max);
}

ProfilePtr make_polynomial_profile(const std::vector<double>& coeffs,
                                   double s_max) {
  auto eval = [coeffs](double s, int deriv) {
    double sum = 0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      const int e = static_cast<int>(k);
      if (e < deriv) continue;
      double c = coeffs[k];
      for (int d = 0; d < deriv; ++d) c *= (e - d);
      sum += c * std::pow(s, e - deriv);
    }
    return sum;
  };
  return make_analytic_profile([eval](double s) { return eval(s, 0); },
                               [eval](double s) { return eval(s, 1); },
                               [eval](double s) { return eval(s, 2); },
                               [eval](double s) { return eval(s, 3); }, s_max);
}

ProfilePtr make_eigen_model_profile(const Interval1DSolution& sol) {
  if (!sol.eigen_mode || !sol.lambda)
    throw ProfileInvalid("eigen model profile requires an eigen-mode run");
  return std::make_shared<EigenModelProfile>(sol);
}

ProfilePtr make_heat_model_profile(std::shared_ptr<const Interval1DSolution> sol) {
  if (sol->eigen_mode)
    throw ProfileInvalid("heat model profile requires a parabolic run");
  return std::make_shared<HeatModelProfile>(std::move(sol));
}

PotentialModulus make_zero_modulus() { return PotentialModulus{}; }

PotentialModulus make_qbar_slope_modulus(const Potential1D& qbar) {
  PotentialModulus m;
  m.value = [qbar](double s, double) { return 2.0 * qbar.d1(s); };
  return m;
}

void validate_profile(const Profile& p, int s_samples, int t_samples) {
  const int nt = p.time_dependent() ? t_samples : 1;
  for (int k = 0; k < nt; ++k) {
    const double t = nt == 1 ? 0.0 : p.t_max() * k / (nt - 1.0);
    if (std::fabs(p.psi(0.0, t)) > 1e-8)
      throw ProfileInvalid("psi(0,t) != 0 at t = " + std::to_string(t));
    if (std::fabs(p.psi_ss(0.0, t)) > 1e-8)
      throw ProfileInvalid("psi_ss(0,t) != 0 at t = " + std::to_string(t));
    for (int j = 0; j < s_samples; ++j) {
      const double s = p.s_max() * j / (s_samples - 1.0);
      if (!(p.psi_s(s, t) > 0))
        throw ProfileInvalid("psi_s <= 0 at s = " + std::to_string(s) +
                             ", t = " + std::to_string(t));
    }
  }
}

void validate_modulus(const PotentialModulus& mod, double s_max, double t_max,
                      int s_samples, int t_samples) {
  const int nt = t_max > 0 ? t_samples : 1;
  for (int k = 0; k < nt; ++k) {
    const double t = nt == 1 ? 0.0 : t_max * k / (nt - 1.0);
    if (std::fabs(mod.value(0.0, t)) > 1e-8)
      throw ProfileInvalid("potential modulus nonzero at s = 0");
    for (int j = 0; j < s_samples; ++j) {
      const double s = s_max * j / (s_samples - 1.0);
      if (mod.value(s, t) < -1e-14)
        throw ProfileInvalid("potential modulus negative at s = " +
                             std::to_string(s));
    }
  }
}

} // namespace segray
