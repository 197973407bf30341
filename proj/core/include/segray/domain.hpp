#pragma once

// Convex domains described by a smooth defining function: phi > 0 inside,
// phi = 0 on the boundary, grad phi != 0 there.  Built-ins cover discs,
// ellipses and quartic super-level sets; arbitrary smooth phi can be supplied
// and is probed for the convexity/regularity invariants at load time.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "segray/linalg.hpp"

namespace segray {

struct ConvexDomain {
  std::function<double(const Vec&)> defining_fn;
  std::function<Vec(const Vec&)> grad_fn;
  std::function<SymMat(const Vec&)> hess_fn;
  int dimension = 2;
  std::optional<double> diameter_hint;
  Vec interior_seed;   // phi(seed) > 0; ray marching and probes start here
  std::string name = "custom";

  double phi(const Vec& x) const { return defining_fn(x); }
  Vec grad(const Vec& x) const { return grad_fn(x); }
  SymMat hess(const Vec& x) const { return hess_fn(x); }

  // First-order estimate of the distance to the zero level set.
  double boundary_distance_estimate(const Vec& x) const;
};

// Built-in domains.
ConvexDomain make_disc(double radius = 1.0, int dim = 2);
// phi = 1 - sum x_i^2 / a_i^2
ConvexDomain make_ellipse(const std::vector<double>& semi_axes);
// phi = 1 - sum c_i x_i^4  (smoothed box)
ConvexDomain make_quartic(const std::vector<double>& coeffs);

// Parameter interval (s_entry < 0 < s_exit) for which x + s*direction stays
// inside {phi > 0}; endpoints located by marching + bisection to |phi| < 1e-10.
// Throws NotInside when phi(x) <= 0, Unbounded when marching exceeds
// max_radius.
std::pair<double, double> chord_clip(const ConvexDomain& domain, const Vec& x,
                                     const Vec& direction,
                                     double max_radius = 1e6);

struct DiameterOptions {
  int directions = 1024;      // boundary sample rays from the interior seed
  double max_radius = 1e6;
  double refine_tol = 1e-7;   // angular pattern-search resolution
};

// Diameter by maximizing chord length over a dense direction grid through
// boundary samples, refined by pattern search on the ray angles.
double diameter(const ConvexDomain& domain, const DiameterOptions& opt = {});

struct DomainProbeReport {
  double min_interior_phi = 0;        // over interior samples (want > 0)
  double min_boundary_grad_norm = 0;  // near the zero level set (want > 0)
  double worst_quasiconcavity = 0;    // phi(mid) - min(phi(x),phi(y)) (want >= -1e-12)
  bool pass = false;
};

// Sampling probes for the ConvexDomain invariants; used when accepting a
// user-supplied phi.  Throws NotInside if the seed is not interior.
DomainProbeReport probe_domain(const ConvexDomain& domain, int samples = 2000,
                               std::uint64_t seed = 1);

} // namespace segray
