#pragma once

// Boundary behaviour of E_f for f = -log of a defining-type function:
// dyadic sequences of endpoint pairs approaching the boundary (blow-up cases)
// and the near-boundary Hessian scan estimating the constant c0 in
// hess f (X,X) >= c0 |X|^2 / phi.

#include <functional>

#include "segray/domain.hpp"
#include "segray/log_field.hpp"
#include "segray/quadrature.hpp"
#include "segray/scalar_field.hpp"

namespace segray {

enum class ProbeMode { Case1, Case2, Case3, Case4, Case5, Lemma31 };

ProbeMode probe_mode_from_string(const std::string& s);
std::string probe_mode_name(ProbeMode m);

// f with an integrand route for E_f: analytic Hessian when available,
// otherwise a second difference of f along the segment at scale fd_step.
struct ProbeField {
  std::function<double(const Vec&)> f;
  std::function<SymMat(const Vec&)> hess;  // may be empty
  double fd_step = 1e-6;
};

ProbeField probe_field_from_scalar(ScalarFieldPtr f);
ProbeField probe_field_from_eigen(const EigenSolution2D& sol);

struct ProbeStep {
  int k = 0;
  double boundary_distance = 0;
  double r = 0;
  double e_f = 0;
  double ratio = 0;  // e_f / r
};

struct BoundarySequenceReport {
  ProbeMode mode = ProbeMode::Case1;
  std::vector<ProbeStep> steps;
  bool monotone_tail = false;  // last 5 values strictly increasing
  double final_value = 0;
  double final_ratio = 0;
  double tail_min = 0;        // min over the last 5 values
  double tail_slope = 0;      // (E_K - E_{K-5}) / 5, informational
  // Lemma31 scan outputs.
  double c0_empirical = 0;
  double delta0_empirical = 0;
};

struct ProbeOptions {
  int steps = 12;              // dyadic levels 2^-1 .. 2^-steps
  Vec axis;                    // chord direction; default e1
  QuadratureRule rule{.nodes_per_panel = 12, .graded_endpoints = true,
                      .grade_levels = 48};
  // Lemma31 scan controls.
  int rays = 64;
  int depth_levels = 8;
  double probe_distance = 0.05;  // leading probe depth as a fraction of D/2
};

BoundarySequenceReport boundary_probe(const ConvexDomain& domain,
                                      const ProbeField& f, ProbeMode mode,
                                      const ProbeOptions& opt = {});

} // namespace segray
