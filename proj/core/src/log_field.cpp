#include "segray/log_field.hpp"

#include <cmath>

#include "segray/errors.hpp"

namespace segray {

GridSolution solve_heat_2d(const Operator2D& op,
                           const std::function<double(const Vec&)>& u0,
                           double dt, double t_end, Scheme scheme,
                           const std::vector<double>& store_times) {
  const int m = op.grid->interior_count();
  Eigen::VectorXd init(m);
  for (int i = 0; i < m; ++i) init[i] = u0(op.grid->point(i));

  GridSolution sol;
  sol.grid = op.grid;
  sol.q_min = op.q_min;
  sol.series =
      heat_solve(op.matrix, init, dt, t_end, scheme, store_times, op.q_min);
  return sol;
}

GridSolution solve_heat_2d(const Operator2D& op, const ScalarField& u0_field,
                           double dt, double t_end, Scheme scheme,
                           const std::vector<double>& store_times) {
  return solve_heat_2d(
      op, [&u0_field](const Vec& x) { return u0_field.value(x); }, dt, t_end,
      scheme, store_times);
}

EigenSolution2D solve_eigen_2d(const Operator2D& op) {
  const EigenPair ep = eigen_smallest(op.matrix);
  EigenSolution2D sol;
  sol.grid = op.grid;
  sol.lambda = ep.lambda;
  sol.phi = ep.vec;
  sol.iterations = ep.iterations;
  sol.residual = ep.residual;
  return sol;
}

LogField2D::LogField2D(std::shared_ptr<const Grid2D> grid,
                       const Eigen::VectorXd& u)
    : grid_(std::move(grid)) {
  logu_.resize(u.size());
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    if (u[i] <= 1e-300)
      throw NonPositiveValue("log_field: solution value at or below 1e-300");
    logu_[i] = std::log(u[i]);
  }
}

double LogField2D::interp_logu(const Vec& p) const {
  const Grid2D& g = *grid_;
  const double fx = (p[0] - g.x0) / g.h;
  const double fy = (p[1] - g.y0) / g.h;
  const int i = static_cast<int>(std::floor(fx));
  const int j = static_cast<int>(std::floor(fy));
  const int c00 = g.index_at(i, j);
  const int c10 = g.index_at(i + 1, j);
  const int c01 = g.index_at(i, j + 1);
  const int c11 = g.index_at(i + 1, j + 1);
  if (c00 < 0 || c10 < 0 || c01 < 0 || c11 < 0)
    throw OutsideDomain("log_field: interpolation cell touches the boundary");
  const double tx = fx - i, ty = fy - j;
  return (1 - tx) * (1 - ty) * logu_[c00] + tx * (1 - ty) * logu_[c10] +
         (1 - tx) * ty * logu_[c01] + tx * ty * logu_[c11];
}

double LogField2D::value(const Vec& p) const { return -interp_logu(p); }

Vec LogField2D::grad(const Vec& p) const {
  const double h = grid_->h;
  Vec g = Vec::zero(2);
  for (int a = 0; a < 2; ++a) {
    Vec pp = p, pm = p;
    pp[a] += h;
    pm[a] -= h;
    g[a] = (-interp_logu(pp) + interp_logu(pm)) / (2.0 * h);
  }
  return g;
}

bool LogField2D::near_boundary(const Vec& p) const {
  return grid_->domain->boundary_distance_estimate(p) < 2.0 * grid_->h;
}

LogField2D log_field(const GridSolution& sol, double t) {
  return LogField2D(sol.grid, sol.series.states[sol.series.snapshot_index(t)]);
}

LogField2D log_field(const EigenSolution2D& sol) {
  return LogField2D(sol.grid, sol.phi);
}

} // namespace segray
