#include "segray/ray_energy.hpp"

#include <cmath>

#include "segray/errors.hpp"

namespace segray {

double energy(const TensorField& tau, const Vec& x, const Vec& y,
              const QuadratureRule& rule) {
  const Vec d = y - x;
  const double r = norm(d);
  if (r <= 1e-12) throw DegenerateSegment("energy: |y - x| <= 1e-12");
  const Vec N = (1.0 / r) * d;
  auto integrand = [&](double s) { return tau.value(x + s * N).contract(N, N); };
  return integrate_segment(integrand, r, rule);
}

double energy_by_gradient_difference(const std::function<Vec(const Vec&)>& f_grad,
                                     const Vec& x, const Vec& y) {
  const Vec d = y - x;
  const double r = norm(d);
  if (r <= 1e-12)
    throw DegenerateSegment("energy_by_gradient_difference: |y - x| <= 1e-12");
  const Vec N = (1.0 / r) * d;
  return dot(f_grad(y) - f_grad(x), N);
}

std::string IdentityId::str() const {
  switch (kind) {
    case Thm22: return "thm-2.2-" + std::to_string(i);
    case Thm23Lower: return "thm-2.3-" + std::to_string(i);
    case Thm23N: return "thm-2.3-n";
    case Thm24: return "thm-2.4-" + std::to_string(i);
    case Thm25: return "thm-2.5";
  }
  return "?";
}

std::vector<IdentityId> applicable_identities(int n) {
  std::vector<IdentityId> ids;
  for (int i = 1; i <= n; ++i) ids.push_back({IdentityId::Thm22, i});
  for (int i = 1; i < n; ++i) ids.push_back({IdentityId::Thm23Lower, i});
  ids.push_back({IdentityId::Thm23N, n});
  for (int i = 1; i <= n; ++i) ids.push_back({IdentityId::Thm24, i});
  ids.push_back({IdentityId::Thm25, n});
  return ids;
}

namespace {

TensorFieldPtr view(const TensorField& tau) {
  // Non-owning adapter so derived_tensor can wrap a reference argument.
  return TensorFieldPtr(&tau, [](const TensorField*) {});
}

} // namespace

double identity_rhs(const IdentityId& id, const TensorField& tau,
                    const SegmentFrame& frame, const QuadratureRule& rule) {
  const int n = frame.n;
  const Vec& N = frame.unit;
  const TensorFieldPtr tp = view(tau);

  switch (id.kind) {
    case IdentityId::Thm22:
      return energy(*derived_tensor(tp, frame.e(id.i - 1), 1), frame.x, frame.y, rule);

    case IdentityId::Thm23Lower: {
      const Vec& ei = frame.e(id.i - 1);
      const double main =
          energy(*derived_tensor(tp, ei, 1), frame.x, frame.y, rule);
      // correction (2/r) int_0^r (s tau_nn;i + 2 tau_in)(theta(s)) ds
      auto corr = [&](double s) {
        const Vec p = frame.theta(s);
        const Tensor3 t3 = tau.d1(p);
        double tau_nni = 0;
        for (int g = 0; g < n; ++g) tau_nni += ei[g] * t3[g].contract(N, N);
        const double tau_in = tau.value(p).contract(ei, N);
        return s * tau_nni + 2.0 * tau_in;
      };
      const double c = integrate_segment(corr, frame.r, rule);
      return main - (2.0 / frame.r) * c;
    }

    case IdentityId::Thm23N: {
      const double main =
          energy(*derived_tensor(tp, N, 1), frame.x, frame.y, rule);
      return main - 2.0 * tau.value(frame.y).contract(N, N);
    }

    case IdentityId::Thm24:
      return energy(*derived_tensor(tp, frame.e(id.i - 1), 2), frame.x, frame.y, rule);

    case IdentityId::Thm25:
      return energy(*derived_tensor(tp, N, 2), frame.x, frame.y, rule);
  }
  return 0;
}

namespace {

// Joint endpoint displacement the identity differentiates along.
void identity_shift(const IdentityId& id, const SegmentFrame& frame, Vec& dx,
                    Vec& dy) {
  const int n = frame.n;
  switch (id.kind) {
    case IdentityId::Thm22:
    case IdentityId::Thm24:
      dx = frame.e(id.i - 1);
      dy = frame.e(id.i - 1);
      break;
    case IdentityId::Thm23Lower:
      dx = frame.e(id.i - 1);
      dy = -frame.e(id.i - 1);
      break;
    case IdentityId::Thm23N:
    case IdentityId::Thm25:
      dx = frame.e(n - 1);
      dy = -frame.e(n - 1);
      break;
  }
}

bool second_order(const IdentityId& id) {
  return id.kind == IdentityId::Thm24 || id.kind == IdentityId::Thm25;
}

} // namespace

double identity_fd_raw(const IdentityId& id, const TensorField& tau,
                       const SegmentFrame& frame, const QuadratureRule& rule,
                       double h) {
  if (!(h > 1e-6 && h < frame.r / 20.0))
    throw DegenerateSegment("identity_fd: h outside (1e-6, r/20)");
  Vec dx, dy;
  identity_shift(id, frame, dx, dy);
  const auto E = [&](double t) {
    return energy(tau, frame.x + t * dx, frame.y + t * dy, rule);
  };
  if (second_order(id)) return (E(h) - 2.0 * E(0.0) + E(-h)) / (h * h);
  return (E(h) - E(-h)) / (2.0 * h);
}

double identity_fd(const IdentityId& id, const TensorField& tau,
                   const SegmentFrame& frame, const QuadratureRule& rule,
                   double h) {
  const double fh = identity_fd_raw(id, tau, frame, rule, h);
  const double fh2 = identity_fd_raw(id, tau, frame, rule, 0.5 * h);
  return (4.0 * fh2 - fh) / 3.0;  // cancels the h^2 term of central differences
}

IdentitySuiteResult identity_suite(const TensorField& tau,
                                   const std::vector<std::pair<Vec, Vec>>& pairs,
                                   const QuadratureRule& rule, double h,
                                   double tol) {
  IdentitySuiteResult res;
  bool all_ok = true;
  for (const auto& [x, y] : pairs) {
    std::vector<IdentityId> ids;
    SegmentFrame frame;
    try {
      frame = segment_frame(x, y);
      ids = applicable_identities(frame.n);
    } catch (const Error& e) {
      IdentityReport bad;
      bad.x = x;
      bad.y = y;
      bad.ok = false;
      bad.error = e.name();
      res.reports.push_back(bad);
      all_ok = false;
      continue;
    }
    for (const auto& id : ids) {
      IdentityReport rep;
      rep.identity_id = id.str();
      rep.x = x;
      rep.y = y;
      rep.h = h;
      try {
        rep.rhs_formula = identity_rhs(id, tau, frame, rule);
        rep.lhs_fd = identity_fd(id, tau, frame, rule, h);
        rep.abs_err = std::fabs(rep.lhs_fd - rep.rhs_formula);
        rep.rel_err = rep.abs_err / std::max(1.0, std::fabs(rep.rhs_formula));
        res.max_rel_err = std::max(res.max_rel_err, rep.rel_err);
      } catch (const Error& e) {
        rep.ok = false;
        rep.error = e.name();
        all_ok = false;
      }
      res.reports.push_back(rep);
    }
  }
  res.pass = all_ok && res.max_rel_err < tol;
  return res;
}

} // namespace segray
