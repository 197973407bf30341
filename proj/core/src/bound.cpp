#include "segray/bound.hpp"

#include <cmath>

#include "segray/errors.hpp"

namespace segray {

namespace {

double eps_limit(const Profile& psi) { return 1e-3 * 2.0 * psi.s_max(); }

double limit_value(const Profile& psi, double t) {
  const double ps0 = psi.psi_s(0.0, t);
  if (!(ps0 > 0))
    throw LimitUndefined("psi_s(0,t) <= 0 at t = " + std::to_string(t));
  return psi.psi_sss(0.0, t) / (ps0 * ps0);
}

double quotient_interior(const Profile& psi, const PotentialModulus& phi_mod,
                         double s, double t) {
  const double a = psi.psi_ss(s, t) - psi.psi_t(s, t);
  const double p = psi.psi(s, t);
  const double ps = psi.psi_s(s, t);
  const double disc = a * a + 4.0 * phi_mod.value(s, t) * p * ps;
  return (a + std::sqrt(std::max(0.0, disc))) / (2.0 * ps * p);
}

// Golden-section minimization on [a, b].
double golden_min(const std::function<double(double)>& f, double a, double b,
                  double tol) {
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - gr * (b - a);
  double d = a + gr * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = f(d);
    }
  }
  return std::min(fc, fd);
}

} // namespace

double m_quotient(const Profile& psi, const PotentialModulus& phi_mod, double s,
                  double t) {
  if (s < eps_limit(psi)) return limit_value(psi, t);
  return quotient_interior(psi, phi_mod, s, t);
}

namespace {

MResult compute_m_impl(const Profile& psi, const PotentialModulus& phi_mod,
                       const double* m0, const MGrid& grid) {
  validate_profile(psi);
  validate_modulus(phi_mod, psi.s_max(), psi.t_max());

  const int ns = std::max(grid.s_samples, 64);
  const int nt = psi.time_dependent() ? std::max(grid.t_samples, 16) : 1;
  const double smax = psi.s_max();
  const double tmax = psi.t_max();
  const double eps = eps_limit(psi);

  MResult res;
  res.m = 1e300;
  for (int k = 0; k < nt; ++k) {
    const double t = nt == 1 ? 0.0 : tmax * k / (nt - 1.0);
    for (int j = 0; j < ns; ++j) {
      const double s = smax * j / (ns - 1.0);
      const double q = m_quotient(psi, phi_mod, s, t);
      if (q < res.m) {
        res.m = q;
        res.s_argmin = s;
        res.t_argmin = t;
      }
    }
  }

  // Local refinement around the grid argmin; the quotient branch switch at
  // eps_limit is respected by refining within one branch only.
  const double ds = smax / (ns - 1.0);
  double s_lo = std::max(res.s_argmin - ds, eps);
  double s_hi = std::min(res.s_argmin + ds, smax);
  if (res.s_argmin >= eps && s_hi > s_lo) {
    for (int round = 0; round < (nt > 1 ? 3 : 1); ++round) {
      const double t_fix = res.t_argmin;
      const double refined = golden_min(
          [&](double s) { return quotient_interior(psi, phi_mod, s, t_fix); },
          s_lo, s_hi, 1e-12 * std::max(1.0, smax));
      if (refined < res.m) res.m = refined;
      if (nt > 1) {
        const double dt = tmax / (nt - 1.0);
        const double t_lo = std::max(res.t_argmin - dt, 0.0);
        const double t_hi = std::min(res.t_argmin + dt, tmax);
        const double s_fix = res.s_argmin;
        if (t_hi > t_lo) {
          const double rt = golden_min(
              [&](double t) { return m_quotient(psi, phi_mod, s_fix, t); },
              t_lo, t_hi, 1e-12 * std::max(1.0, tmax));
          if (rt < res.m) res.m = rt;
        }
      }
    }
  } else {
    res.limit_branch = true;
  }

  if (m0 && *m0 < res.m) {
    res.m = *m0;
    res.clamped_by_m0 = true;
  }
  return res;
}

} // namespace

MResult compute_m_parabolic(const Profile& psi, const PotentialModulus& phi_mod,
                            double m0, const MGrid& grid) {
  return compute_m_impl(psi, phi_mod, &m0, grid);
}

MResult compute_m_elliptic(const Profile& psi, const PotentialModulus& phi_mod,
                           const MGrid& grid) {
  if (psi.time_dependent())
    throw ProfileInvalid("compute_m_elliptic requires a time-independent profile");
  return compute_m_impl(psi, phi_mod, nullptr, grid);
}

} // namespace segray
