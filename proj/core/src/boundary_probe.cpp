#include "segray/boundary_probe.hpp"

#include <algorithm>
#include <cmath>

#include "segray/errors.hpp"

namespace segray {

ProbeMode probe_mode_from_string(const std::string& s) {
  if (s == "case1") return ProbeMode::Case1;
  if (s == "case2") return ProbeMode::Case2;
  if (s == "case3") return ProbeMode::Case3;
  if (s == "case4") return ProbeMode::Case4;
  if (s == "case5") return ProbeMode::Case5;
  if (s == "lemma31") return ProbeMode::Lemma31;
  throw UnknownKind("unknown probe mode: " + s);
}

std::string probe_mode_name(ProbeMode m) {
  switch (m) {
    case ProbeMode::Case1: return "case1";
    case ProbeMode::Case2: return "case2";
    case ProbeMode::Case3: return "case3";
    case ProbeMode::Case4: return "case4";
    case ProbeMode::Case5: return "case5";
    case ProbeMode::Lemma31: return "lemma31";
  }
  return "?";
}

ProbeField probe_field_from_scalar(ScalarFieldPtr f) {
  ProbeField p;
  p.f = [f](const Vec& x) { return f->value(x); };
  p.hess = [f](const Vec& x) { return f->hessian(x); };
  return p;
}

ProbeField probe_field_from_eigen(const EigenSolution2D& sol) {
  auto field = std::make_shared<LogField2D>(log_field(sol));
  ProbeField p;
  p.f = [field](const Vec& x) { return field->value(x); };
  p.fd_step = sol.grid->h;
  return p;
}

namespace {

double probe_energy(const ProbeField& f, const Vec& x, const Vec& y,
                    const QuadratureRule& rule) {
  const Vec d = y - x;
  const double r = norm(d);
  const Vec N = (1.0 / r) * d;
  std::function<double(double)> integrand;
  if (f.hess) {
    integrand = [&](double s) { return f.hess(x + s * N).contract(N, N); };
  } else {
    const double delta = f.fd_step;
    integrand = [&, delta](double s) {
      const Vec p = x + s * N;
      return (f.f(p + delta * N) - 2.0 * f.f(p) + f.f(p - delta * N)) /
             (delta * delta);
    };
  }
  return integrate_segment(integrand, r, rule);
}

void require_inside(const ConvexDomain& dom, const Vec& p) {
  if (dom.phi(p) <= 0)
    throw SequenceLeftDomain("probe point left the domain");
}

Vec rotate90(const Vec& v) { return Vec(-v[1], v[0]); }

} // namespace

BoundarySequenceReport boundary_probe(const ConvexDomain& domain,
                                      const ProbeField& f, ProbeMode mode,
                                      const ProbeOptions& opt) {
  BoundarySequenceReport rep;
  rep.mode = mode;

  const Vec seed = domain.interior_seed;
  const double D = domain.diameter_hint ? *domain.diameter_hint : diameter(domain);
  Vec axis = opt.axis.n == domain.dimension ? normalized(opt.axis)
                                            : Vec::unit(domain.dimension, 0);

  if (mode == ProbeMode::Lemma31) {
    // Near-boundary scan of phi * lambda_min(hess f).
    auto lambda_min_at = [&](const Vec& p) {
      if (f.hess) return smallest_eigenvalue(f.hess(p));
      // FD Hessian of f at scale fd_step.
      const double d = f.fd_step;
      SymMat h = SymMat::zero(domain.dimension);
      for (int a = 0; a < domain.dimension; ++a)
        for (int b = a; b < domain.dimension; ++b) {
          Vec pa = p, pb = p, pab = p;
          pa[a] += d;
          pb[b] += d;
          pab[a] += d;
          pab[b] += d;
          Vec ma = p, mb = p, mab = p;
          ma[a] -= d;
          mb[b] -= d;
          mab[a] -= d;
          mab[b] -= d;
          if (a == b) {
            h.set_sym(a, b, (f.f(pa) - 2.0 * f.f(p) + f.f(ma)) / (d * d));
          } else {
            Vec pamb = p, mapb = p;
            pamb[a] += d;
            pamb[b] -= d;
            mapb[a] -= d;
            mapb[b] += d;
            h.set_sym(a, b, (f.f(pab) - f.f(pamb) - f.f(mapb) + f.f(mab)) /
                                (4.0 * d * d));
          }
        }
      return smallest_eigenvalue(h);
    };

    struct Sample {
      double phi, lmin;
    };
    std::vector<Sample> samples;
    for (int rray = 0; rray < opt.rays; ++rray) {
      const double a = 2.0 * M_PI * rray / opt.rays;
      const Vec dir(std::cos(a), std::sin(a));
      const double s_exit = chord_clip(domain, seed, dir).second;
      const Vec b = seed + s_exit * dir;
      for (int j = 0; j <= opt.depth_levels; ++j) {
        const double depth = opt.probe_distance * (D / 2.0) * std::pow(0.5, j);
        const Vec p = b - depth * dir;
        require_inside(domain, p);
        samples.push_back({domain.phi(p), lambda_min_at(p)});
      }
    }
    std::sort(samples.begin(), samples.end(),
              [](const Sample& a, const Sample& b) { return a.phi < b.phi; });
    // delta0: largest probed phi below which every sample has lmin > 0.
    double delta0 = 0;
    for (const auto& s : samples) {
      if (s.lmin <= 0) break;
      delta0 = s.phi;
    }
    double c0 = 1e300;
    for (const auto& s : samples)
      if (s.phi <= delta0) c0 = std::min(c0, s.phi * s.lmin);
    rep.delta0_empirical = delta0;
    rep.c0_empirical = delta0 > 0 ? c0 : 0.0;
    return rep;
  }

  // Dyadic endpoint sequences.
  const double exit_fwd = chord_clip(domain, seed, axis).second;
  const double exit_bwd = chord_clip(domain, seed, -1.0 * axis).second;
  const Vec b_plus = seed + exit_fwd * axis;
  const Vec b_minus = seed - exit_bwd * axis;

  for (int k = 1; k <= opt.steps; ++k) {
    const double delta = std::pow(0.5, k) * (D / 2.0);
    Vec x, y;
    switch (mode) {
      case ProbeMode::Case1:
        x = seed;
        y = b_plus - delta * axis;
        break;
      case ProbeMode::Case2:
        x = b_plus - delta * axis;
        y = seed;
        break;
      case ProbeMode::Case3:
        x = b_minus + delta * axis;
        y = b_plus - delta * axis;
        break;
      case ProbeMode::Case4:
      case ProbeMode::Case5: {
        // phi increases inward, so grad phi is the inward direction.
        const Vec n_in = normalized(domain.grad(b_plus));
        const Vec tang = rotate90(n_in);
        x = b_plus + delta * normalized(n_in + 0.5 * tang);
        y = b_plus + delta * normalized(n_in - 0.5 * tang);
        break;
      }
      default:
        break;
    }
    require_inside(domain, x);
    require_inside(domain, y);

    ProbeStep step;
    step.k = k;
    step.boundary_distance = delta;
    step.r = norm(y - x);
    step.e_f = probe_energy(f, x, y, opt.rule);
    step.ratio = step.e_f / step.r;
    rep.steps.push_back(step);
  }

  const int K = static_cast<int>(rep.steps.size());
  const int tail = std::min(5, K);
  const bool ratio_mode = mode == ProbeMode::Case5;
  auto val = [&](int i) {
    return ratio_mode ? rep.steps[i].ratio : rep.steps[i].e_f;
  };
  rep.monotone_tail = true;
  rep.tail_min = 1e300;
  for (int i = K - tail; i < K; ++i) {
    if (i > K - tail && !(val(i) > val(i - 1))) rep.monotone_tail = false;
    rep.tail_min = std::min(rep.tail_min, val(i));
  }
  rep.final_value = rep.steps.back().e_f;
  rep.final_ratio = rep.steps.back().ratio;
  rep.tail_slope = tail > 1 ? (val(K - 1) - val(K - tail)) / (tail - 1) : 0.0;
  return rep;
}

} // namespace segray
