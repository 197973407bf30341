#include "segray/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "segray/errors.hpp"

namespace segray {

namespace {

struct GaussTable {
  std::vector<double> x, w;
};

// Legendre nodes by Newton iteration on P_n; machine-precision for n <= 64.
GaussTable compute_gauss(int n) {
  GaussTable t;
  t.x.resize(n);
  t.w.resize(n);
  for (int k = 0; k < n; ++k) {
    double x = std::cos(M_PI * (k + 0.75) / (n + 0.5));
    double dp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-16) break;
    }
    t.x[n - 1 - k] = x;
    t.w[n - 1 - k] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return t;
}

const GaussTable& table(int order) {
  static std::map<int, GaussTable> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, compute_gauss(order)).first;
  return it->second;
}

double panel_sum(const std::function<double(double)>& fn, double a, double b,
                 const GaussTable& g) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double s = 0;
  for (std::size_t k = 0; k < g.x.size(); ++k)
    s += g.w[k] * fn(mid + half * g.x[k]);
  return half * s;
}

double composite(const std::function<double(double)>& fn, double length,
                 int panels, const GaussTable& g) {
  double s = 0;
  for (int p = 0; p < panels; ++p)
    s += panel_sum(fn, length * p / panels, length * (p + 1) / panels, g);
  return s;
}

// Breakpoints shrinking dyadically toward 0 and length.
std::vector<double> graded_breakpoints(double length, int levels) {
  std::vector<double> bp;
  bp.push_back(0.0);
  for (int j = levels; j >= 1; --j) bp.push_back(0.5 * length * std::pow(0.5, j));
  for (int j = 1; j <= levels; ++j) bp.push_back(length - 0.5 * length * std::pow(0.5, j));
  bp.push_back(length);
  return bp;
}

} // namespace

const std::vector<double>& gauss_nodes(int order) { return table(order).x; }
const std::vector<double>& gauss_weights(int order) { return table(order).w; }

double integrate_segment(const std::function<double(double)>& fn, double length,
                         const QuadratureRule& rule) {
  const GaussTable& g = table(rule.nodes_per_panel);

  if (rule.graded_endpoints) {
    const auto bp = graded_breakpoints(length, rule.grade_levels);
    double s = 0;
    for (std::size_t i = 0; i + 1 < bp.size(); ++i)
      s += panel_sum(fn, bp[i], bp[i + 1], g);
    return s;
  }

  if (!rule.adaptive) return composite(fn, length, rule.panels, g);

  int panels = rule.panels;
  double prev = composite(fn, length, panels, g);
  while (2 * panels <= rule.max_panels) {
    panels *= 2;
    const double cur = composite(fn, length, panels, g);
    if (std::fabs(cur - prev) < rule.refine_tol * std::max(1.0, std::fabs(cur)))
      return cur;
    prev = cur;
  }
  throw QuadratureNotConverged("panel doubling exceeded the cap of " +
                               std::to_string(rule.max_panels));
}

} // namespace segray
