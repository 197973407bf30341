#pragma once

#include <functional>
#include <vector>

namespace segray {

// Composite Gauss-Legendre panel rule for segment integrals.  The node layout
// is symmetric under s -> r - s, which makes energy(x,y) = energy(y,x) hold
// to roundoff.  graded_endpoints switches to dyadically shrinking panels
// toward both endpoints so that integrands with boundary blow-up (1/distance
// type) stay affordable.
struct QuadratureRule {
  int panels = 8;
  int nodes_per_panel = 10;   // Gauss-Legendre order, 4..16
  bool adaptive = false;
  double refine_tol = 1e-12;  // relative panel-doubling stop for adaptive mode
  int max_panels = 8192;
  bool graded_endpoints = false;
  int grade_levels = 40;      // dyadic levels toward each endpoint
};

// Nodes/weights for Gauss-Legendre of the given order on [-1, 1].
const std::vector<double>& gauss_nodes(int order);
const std::vector<double>& gauss_weights(int order);

// Integral of fn over [0, length] under the rule.  Throws
// QuadratureNotConverged when adaptive refinement exceeds max_panels.
double integrate_segment(const std::function<double(double)>& fn, double length,
                         const QuadratureRule& rule);

} // namespace segray
