#pragma once

// Sampled verification of the log-concavity lower bounds.  E_f is evaluated
// by the gradient-difference form (exact for Hessian integrands) with
// quadrature spot-checks on a deterministic 1% of the samples; pairs are
// rejection-sampled away from the boundary where the discrete gradient
// degrades.

#include <cstdint>
#include <functional>

#include "segray/bound.hpp"
#include "segray/domain.hpp"
#include "segray/log_field.hpp"
#include "segray/quadrature.hpp"
#include "segray/ray_energy.hpp"

namespace segray {

// f(x,t) together with grad f(x,t); quad_step is the probe scale for the
// quadrature spot-check integrand (the grid spacing for discrete fields).
struct FEval {
  std::function<double(const Vec&, double)> value;
  std::function<Vec(const Vec&, double)> grad;
  double quad_step = 1e-4;
};

FEval feval_from_scalar(ScalarFieldPtr f);
FEval feval_from_grid(const GridSolution& sol, const std::vector<double>& t_list);
FEval feval_from_eigen(const EigenSolution2D& sol);

struct SampleRow {
  Vec x, y;
  double t = 0, r = 0, e_f = 0, bound = 0, margin = 0;
};

struct SpotCheckRow {
  std::size_t row = 0;
  double e_quad = 0, e_gd = 0, delta = 0;
};

struct VerificationReport {
  std::vector<SampleRow> rows;  // sorted by margin, worst first
  double min_margin = 0;
  long violations = 0;  // margin < -tol_rel * max(1, |bound|)
  std::uint64_t seed = 0;
  double cutoff = 0;  // near-boundary cutoff fraction of D
  int samples = 0;
  double tol_rel = 0;
  bool pass = false;
  bool indicative = false;
  std::vector<SpotCheckRow> spot_checks;
  double max_spot_delta = 0;
  double hypothesis_min_margin = 0;  // comparison runs only
  std::string label;
};

struct VerifyOptions {
  int samples = 10000;
  std::vector<double> t_list = {0.0};
  double cutoff = 0.02;  // fraction of D
  std::uint64_t seed = 12345;
  double tol_rel = 1e-3;       // discretization slack on margins
  double spot_fraction = 0.01;
  QuadratureRule rule{};       // spot checks
};

// E_f(x,y,t) >= m psi(r/2, t) on sampled pairs.
VerificationReport verify_lower_bound(const FEval& f, const Profile& psi,
                                      double m, const ConvexDomain& domain,
                                      const VerifyOptions& opt);

// Cor of the parabolic estimate: checks E_q >= 2 qbar_s(r/2) and
// E_f(.,.,0) >= 2 fbar_s(r/2, 0) first (HypothesisViolated on failure, no
// margins reported), then E_f(x,y,t) >= 2 fbar_s(r/2, t) at each t.
VerificationReport verify_comparison_parabolic(
    const GridSolution& solution2d, ScalarFieldPtr q, ScalarFieldPtr f0,
    const Interval1DSolution& model1d, const ConvexDomain& domain,
    const VerifyOptions& opt);

// Eigenfunction comparison: hypothesis E_q >= 2 qbar_s(r/2), conclusion
// E_f(x,y) >= 2 fbar_s(r/2).
VerificationReport verify_comparison_elliptic(const EigenSolution2D& solution2d,
                                              ScalarFieldPtr q,
                                              const Interval1DSolution& model1d,
                                              const ConvexDomain& domain,
                                              const VerifyOptions& opt);

// Sharpness witness: the interval model compared against itself through the
// pair (-s, s); returns max |E_fbar(-s,s) - 2 fbar_s(s)| over an s-grid.
double model_self_margin(const Interval1DSolution& model1d, double t,
                         int samples = 200);

} // namespace segray
