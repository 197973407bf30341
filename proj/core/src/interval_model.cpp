#include "segray/interval_model.hpp"

#include <cmath>

#include "segray/errors.hpp"
#include "segray/spectral.hpp"

namespace segray {

bool is_even(const std::function<double(double)>& f, double L, int samples,
             double tol) {
  for (int k = 0; k < samples; ++k) {
    const double s = L * k / (samples - 1.0);
    if (std::fabs(f(s) - f(-s)) > tol) return false;
  }
  return true;
}

namespace {

IntervalGrid make_grid(double L, int nodes) {
  IntervalGrid g;
  g.L = L;
  g.m = nodes;
  g.h = 2.0 * L / (nodes + 1);
  return g;
}

Eigen::SparseMatrix<double> operator_1d(const IntervalGrid& g,
                                        const Potential1D& qbar) {
  const double inv_h2 = 1.0 / (g.h * g.h);
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(static_cast<std::size_t>(g.m) * 3);
  for (int j = 0; j < g.m; ++j) {
    trip.emplace_back(j, j, 2.0 * inv_h2 + qbar.value(g.node(j)));
    if (j > 0) trip.emplace_back(j, j - 1, -inv_h2);
    if (j + 1 < g.m) trip.emplace_back(j, j + 1, -inv_h2);
  }
  Eigen::SparseMatrix<double> A(g.m, g.m);
  A.setFromTriplets(trip.begin(), trip.end());
  A.makeCompressed();
  return A;
}

} // namespace

Interval1DSolution solve_1d_model_eigen(const Potential1D& qbar, double L,
                                        int nodes) {
  if (!is_even(qbar.value, L))
    throw NotEven("solve_1d_model: qbar is not even within 1e-10");

  Interval1DSolution sol;
  sol.grid = make_grid(L, nodes);
  sol.qbar = qbar;
  sol.eigen_mode = true;

  const EigenPair ep = eigen_smallest(operator_1d(sol.grid, qbar));
  sol.lambda = ep.lambda;
  sol.series.times = {0.0};
  sol.series.states = {ep.vec};
  sol.series.min_value = ep.vec.minCoeff();
  return sol;
}

Interval1DSolution solve_1d_model_heat(const Potential1D& qbar, double L,
                                       const std::function<double(double)>& u0,
                                       const Model1DOptions& opt) {
  if (!is_even(qbar.value, L))
    throw NotEven("solve_1d_model: qbar is not even within 1e-10");
  if (!is_even(u0, L))
    throw NotEven("solve_1d_model: initial data is not even within 1e-10");

  Interval1DSolution sol;
  sol.grid = make_grid(L, opt.nodes);
  sol.qbar = qbar;

  Eigen::VectorXd init(sol.grid.m);
  double q_min = 1e300;
  for (int j = 0; j < sol.grid.m; ++j) {
    init[j] = u0(sol.grid.node(j));
    q_min = std::min(q_min, qbar.value(sol.grid.node(j)));
  }
  if (init.minCoeff() <= 0)
    throw NonPositiveState("solve_1d_model: initial data not strictly positive");

  sol.series = heat_solve(operator_1d(sol.grid, qbar), init, opt.dt, opt.t_end,
                          opt.scheme, opt.store_times, q_min);
  return sol;
}

LogSlope1D::LogSlope1D(const Interval1DSolution& sol, double t)
    : grid_(sol.grid) {
  const Eigen::VectorXd& u = sol.series.states[sol.series.snapshot_index(t)];
  const int m = grid_.m;
  fbar_.resize(m);
  for (int j = 0; j < m; ++j) {
    if (u[j] <= 1e-300)
      throw NonPositiveValue("log slope: solution value at or below floor");
    fbar_[j] = -std::log(u[j]);
  }
  fs_.assign(m, 0.0);
  const double inv12h = 1.0 / (12.0 * grid_.h);
  for (int j = 2; j + 2 < m; ++j)
    fs_[j] = (fbar_[j - 2] - 8.0 * fbar_[j - 1] + 8.0 * fbar_[j + 1] -
              fbar_[j + 2]) *
             inv12h;
}

double LogSlope1D::interp(const std::vector<double>& v, double s) const {
  if (std::fabs(s) > s_max())
    throw OutsideDomain("log slope: |s| beyond L - 5h");
  // Cubic Lagrange through the 4 nodes around s; stencil stays inside the
  // range where fs_ carries the 4th-order values.
  int j = static_cast<int>(std::floor((s - grid_.node(0)) / grid_.h));
  j = std::max(3, std::min(grid_.m - 5, j));
  const double t = (s - grid_.node(j)) / grid_.h;
  const double vm1 = v[j - 1], v0 = v[j], v1 = v[j + 1], v2 = v[j + 2];
  return -t * (t - 1.0) * (t - 2.0) / 6.0 * vm1 +
         (t * t - 1.0) * (t - 2.0) / 2.0 * v0 -
         t * (t + 1.0) * (t - 2.0) / 2.0 * v1 + t * (t * t - 1.0) / 6.0 * v2;
}

double LogSlope1D::operator()(double s) const { return interp(fs_, s); }
double LogSlope1D::fbar(double s) const { return interp(fbar_, s); }

} // namespace segray
