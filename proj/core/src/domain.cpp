#include "segray/domain.hpp"

#include <algorithm>
#include <cmath>

#include "segray/errors.hpp"
#include "segray/sampling.hpp"

namespace segray {

double ConvexDomain::boundary_distance_estimate(const Vec& x) const {
  const double p = phi(x);
  const double g = norm(grad(x));
  if (g < 1e-14) return 1e300;  // flat gradient: far from the level set
  return p / g;
}

ConvexDomain make_disc(double radius, int dim) {
  ConvexDomain d;
  const double r2 = radius * radius;
  d.dimension = dim;
  d.name = "disc";
  d.diameter_hint = 2.0 * radius;
  d.interior_seed = Vec::zero(dim);
  d.defining_fn = [r2](const Vec& x) { return r2 - dot(x, x); };
  d.grad_fn = [](const Vec& x) { return -2.0 * x; };
  d.hess_fn = [dim](const Vec&) { return -2.0 * SymMat::identity(dim); };
  return d;
}

ConvexDomain make_ellipse(const std::vector<double>& semi_axes) {
  const int dim = static_cast<int>(semi_axes.size());
  ConvexDomain d;
  d.dimension = dim;
  d.name = "ellipse";
  std::array<double, kMaxDim> inv2{};
  double longest = 0;
  for (int i = 0; i < dim; ++i) {
    inv2[i] = 1.0 / (semi_axes[i] * semi_axes[i]);
    longest = std::max(longest, semi_axes[i]);
  }
  d.diameter_hint = 2.0 * longest;
  d.interior_seed = Vec::zero(dim);
  d.defining_fn = [dim, inv2](const Vec& x) {
    double s = 1.0;
    for (int i = 0; i < dim; ++i) s -= x[i] * x[i] * inv2[i];
    return s;
  };
  d.grad_fn = [dim, inv2](const Vec& x) {
    Vec g = Vec::zero(dim);
    for (int i = 0; i < dim; ++i) g[i] = -2.0 * x[i] * inv2[i];
    return g;
  };
  d.hess_fn = [dim, inv2](const Vec&) {
    SymMat h = SymMat::zero(dim);
    for (int i = 0; i < dim; ++i) h.at(i, i) = -2.0 * inv2[i];
    return h;
  };
  return d;
}

ConvexDomain make_quartic(const std::vector<double>& coeffs) {
  const int dim = static_cast<int>(coeffs.size());
  ConvexDomain d;
  d.dimension = dim;
  d.name = "quartic";
  std::array<double, kMaxDim> c{};
  for (int i = 0; i < dim; ++i) c[i] = coeffs[i];
  d.interior_seed = Vec::zero(dim);
  d.defining_fn = [dim, c](const Vec& x) {
    double s = 1.0;
    for (int i = 0; i < dim; ++i) s -= c[i] * x[i] * x[i] * x[i] * x[i];
    return s;
  };
  d.grad_fn = [dim, c](const Vec& x) {
    Vec g = Vec::zero(dim);
    for (int i = 0; i < dim; ++i) g[i] = -4.0 * c[i] * x[i] * x[i] * x[i];
    return g;
  };
  d.hess_fn = [dim, c](const Vec& x) {
    SymMat h = SymMat::zero(dim);
    for (int i = 0; i < dim; ++i) h.at(i, i) = -12.0 * c[i] * x[i] * x[i];
    return h;
  };
  return d;
}

namespace {

// One-sided clip: largest s > 0 with phi(x + s dir) = 0, |phi| < 1e-10.
double clip_forward(const ConvexDomain& domain, const Vec& x, const Vec& dir,
                    double max_radius) {
  double lo = 0.0;
  double step = 1e-3 * std::max(1.0, domain.diameter_hint.value_or(1.0));
  double hi = step;
  while (domain.phi(x + hi * dir) > 0) {
    lo = hi;
    hi *= 1.6;
    if (hi > max_radius)
      throw Unbounded("chord marching exceeded max radius " + std::to_string(max_radius));
  }
  // phi(lo) > 0 >= phi(hi); bisect on the residual.
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double p = domain.phi(x + mid * dir);
    if (std::fabs(p) < 1e-10) return mid;
    if (p > 0)
      lo = mid;
    else
      hi = mid;
    if (hi - lo < 1e-16 * std::max(1.0, hi)) break;
  }
  return 0.5 * (lo + hi);
}

} // namespace

std::pair<double, double> chord_clip(const ConvexDomain& domain, const Vec& x,
                                     const Vec& direction, double max_radius) {
  if (domain.phi(x) <= 0)
    throw NotInside("chord_clip: base point is not interior (phi <= 0)");
  const Vec dir = normalized(direction);
  const double s_exit = clip_forward(domain, x, dir, max_radius);
  const double s_entry = -clip_forward(domain, x, -1.0 * dir, max_radius);
  return {s_entry, s_exit};
}

namespace {

Vec direction_from_angles(int dim, double a, double b) {
  if (dim == 1) return Vec::unit(1, 0);
  if (dim == 2) {
    Vec v = Vec::zero(2);
    v[0] = std::cos(a);
    v[1] = std::sin(a);
    return v;
  }
  Vec v = Vec::zero(3);
  v[0] = std::cos(b) * std::cos(a);
  v[1] = std::cos(b) * std::sin(a);
  v[2] = std::sin(b);
  return v;
}

} // namespace

double diameter(const ConvexDomain& domain, const DiameterOptions& opt) {
  const Vec seed = domain.interior_seed;
  if (domain.phi(seed) <= 0)
    throw NotInside("diameter: interior seed has phi <= 0");
  const int dim = domain.dimension;

  auto boundary_point = [&](double a, double b) {
    const Vec dir = direction_from_angles(dim, a, b);
    const double s = chord_clip(domain, seed, dir, opt.max_radius).second;
    return seed + s * dir;
  };

  // Dense boundary sample; for convex domains the diameter is attained
  // between boundary points.
  std::vector<Vec> pts;
  std::vector<std::pair<double, double>> angles;
  if (dim <= 2) {
    const int m = opt.directions;
    pts.reserve(m);
    for (int i = 0; i < m; ++i) {
      const double a = 2.0 * M_PI * i / m;
      angles.emplace_back(a, 0.0);
      pts.push_back(boundary_point(a, 0.0));
    }
  } else {
    // Fibonacci sphere.
    const int m = opt.directions;
    const double ga = M_PI * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < m; ++i) {
      const double z = 1.0 - 2.0 * (i + 0.5) / m;
      const double b = std::asin(z);
      const double a = std::fmod(ga * i, 2.0 * M_PI);
      angles.emplace_back(a, b);
      pts.push_back(boundary_point(a, b));
    }
  }

  std::size_t bi = 0, bj = 1;
  double best = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const double d = norm(pts[i] - pts[j]);
      if (d > best) {
        best = d;
        bi = i;
        bj = j;
      }
    }
  }

  // Pattern search on the two ray angle tuples.
  double ai = angles[bi].first, biang = angles[bi].second;
  double aj = angles[bj].first, bjang = angles[bj].second;
  double step = 2.0 * M_PI / opt.directions;
  auto chord = [&](double a1, double b1, double a2, double b2) {
    return norm(boundary_point(a1, b1) - boundary_point(a2, b2));
  };
  while (step > opt.refine_tol) {
    bool improved = false;
    const double deltas[2] = {step, -step};
    for (double d : deltas) {
      if (chord(ai + d, biang, aj, bjang) > best) { ai += d; best = chord(ai, biang, aj, bjang); improved = true; }
      if (chord(ai, biang, aj + d, bjang) > best) { aj += d; best = chord(ai, biang, aj, bjang); improved = true; }
      if (dim >= 3) {
        if (chord(ai, biang + d, aj, bjang) > best) { biang += d; best = chord(ai, biang, aj, bjang); improved = true; }
        if (chord(ai, biang, aj, bjang + d) > best) { bjang += d; best = chord(ai, biang, aj, bjang); improved = true; }
      }
    }
    if (!improved) step *= 0.5;
  }
  return best;
}

DomainProbeReport probe_domain(const ConvexDomain& domain, int samples,
                               std::uint64_t seed) {
  if (domain.phi(domain.interior_seed) <= 0)
    throw NotInside("probe_domain: interior seed has phi <= 0");

  SplitMix rng(seed);
  const int dim = domain.dimension;
  const double D = domain.diameter_hint ? *domain.diameter_hint : diameter(domain);

  DomainProbeReport rep;
  rep.min_interior_phi = 1e300;
  rep.min_boundary_grad_norm = 1e300;
  rep.worst_quasiconcavity = 1e300;

  // Boundary-adjacent gradient probes plus inside/outside sign probes.
  for (int k = 0; k < samples; ++k) {
    double a = 2.0 * M_PI * rng.uniform();
    double b = dim >= 3 ? std::asin(2.0 * rng.uniform() - 1.0) : 0.0;
    Vec dir = Vec::zero(dim);
    if (dim == 1) {
      dir[0] = rng.uniform() < 0.5 ? -1.0 : 1.0;
    } else if (dim == 2) {
      dir[0] = std::cos(a);
      dir[1] = std::sin(a);
    } else {
      dir[0] = std::cos(b) * std::cos(a);
      dir[1] = std::cos(b) * std::sin(a);
      dir[2] = std::sin(b);
    }
    const double s = chord_clip(domain, domain.interior_seed, dir).second;
    const Vec bpt = domain.interior_seed + s * dir;

    const double off = 0.05 * D * rng.uniform();
    const Vec inward = bpt - off * dir;
    rep.min_interior_phi = std::min(rep.min_interior_phi, domain.phi(inward));
    rep.min_boundary_grad_norm =
        std::min(rep.min_boundary_grad_norm, norm(domain.grad(inward)));
    const Vec outward = bpt + std::max(off, 1e-6 * D) * dir;
    if (domain.phi(outward) >= 0) rep.min_interior_phi = -1.0;  // sign violation
  }

  // Quasiconcavity of super-level sets: phi(mid) >= min(phi(x), phi(y)) - 1e-12.
  PointSampler ps(domain, 0.0, seed + 1);
  for (int k = 0; k < samples; ++k) {
    const Vec x = ps.draw();
    const Vec y = ps.draw();
    const Vec mid = 0.5 * (x + y);
    const double gap =
        domain.phi(mid) - std::min(domain.phi(x), domain.phi(y));
    rep.worst_quasiconcavity = std::min(rep.worst_quasiconcavity, gap);
  }

  rep.pass = rep.min_interior_phi > 0 && rep.min_boundary_grad_norm > 0 &&
             rep.worst_quasiconcavity >= -1e-12;
  return rep;
}

} // namespace segray
