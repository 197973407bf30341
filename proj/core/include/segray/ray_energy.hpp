#pragma once

// Line segment energy E_tau(x,y) = int_0^r tau(theta(s))(N,N) ds and the
// first/second derivative identities along the paired directions E_i and
// Etilde_i, each with an exact right-hand side and a finite-difference
// left-hand side for cross-checking.

#include <string>
#include <vector>

#include "segray/quadrature.hpp"
#include "segray/segment.hpp"
#include "segray/tensor_field.hpp"

namespace segray {

// Composite Gauss-Legendre quadrature of tau(theta(s))(N,N) over the segment.
double energy(const TensorField& tau, const Vec& x, const Vec& y,
              const QuadratureRule& rule);

// Fundamental-theorem shortcut for Hessian integrands:
// int_0^r f_NN ds = <grad f(y) - grad f(x), N>.  Exact whenever tau = hess f;
// agreement with energy() is a standing oracle for that case.
double energy_by_gradient_difference(const std::function<Vec(const Vec&)>& f_grad,
                                     const Vec& x, const Vec& y);

struct IdentityId {
  enum Kind { Thm22, Thm23Lower, Thm23N, Thm24, Thm25 } kind = Thm22;
  int i = 1;  // 1-based frame direction; ignored for Thm23N / Thm25
  std::string str() const;
};

// Every identity applicable in dimension n.
std::vector<IdentityId> applicable_identities(int n);

// Exact right-hand side of the named identity at the frame's base pair.
double identity_rhs(const IdentityId& id, const TensorField& tau,
                    const SegmentFrame& frame, const QuadratureRule& rule);

// Raw central (or second central) finite difference of the energy under the
// joint endpoint shift that the identity differentiates along.
double identity_fd_raw(const IdentityId& id, const TensorField& tau,
                       const SegmentFrame& frame, const QuadratureRule& rule,
                       double h);

// Same, Richardson-extrapolated over {h, h/2}.
double identity_fd(const IdentityId& id, const TensorField& tau,
                   const SegmentFrame& frame, const QuadratureRule& rule,
                   double h);

struct IdentityReport {
  std::string identity_id;
  Vec x, y;
  double h = 0;
  double lhs_fd = 0;
  double rhs_formula = 0;
  double abs_err = 0;
  double rel_err = 0;  // |lhs-rhs| / max(1, |rhs|)
  bool ok = true;      // false when evaluation of this entry threw
  std::string error;
};

struct IdentitySuiteResult {
  std::vector<IdentityReport> reports;
  double max_rel_err = 0;
  bool pass = false;  // all rel_err < tol and no per-pair failures
};

// Runs every applicable identity for every pair.  Per-pair failures are
// recorded, not rethrown.
IdentitySuiteResult identity_suite(const TensorField& tau,
                                   const std::vector<std::pair<Vec, Vec>>& pairs,
                                   const QuadratureRule& rule, double h,
                                   double tol = 1e-5);

} // namespace segray
