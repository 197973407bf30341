#pragma once

// Discrete 2D solutions and the f = -log u evaluator used by the verification
// suites.  f is interpolated bilinearly from log-values; the gradient comes
// from centered differences of the interpolant at the grid scale, which keeps
// the leading interpolation error in phase and second-order accurate.

#include "segray/grid2d.hpp"
#include "segray/heat.hpp"
#include "segray/spectral.hpp"

namespace segray {

struct GridSolution {
  std::shared_ptr<Grid2D> grid;
  TimeSeries series;
  double q_min = 0;
};

// Interfaces the 2D operator to the generic time stepper.
GridSolution solve_heat_2d(const Operator2D& op, const ScalarField& u0_field,
                           double dt, double t_end, Scheme scheme,
                           const std::vector<double>& store_times);
GridSolution solve_heat_2d(const Operator2D& op,
                           const std::function<double(const Vec&)>& u0,
                           double dt, double t_end, Scheme scheme,
                           const std::vector<double>& store_times);

struct EigenSolution2D {
  std::shared_ptr<Grid2D> grid;
  double lambda = 0;
  Eigen::VectorXd phi;  // max-normalized, positive
  int iterations = 0;
  double residual = 0;
};

EigenSolution2D solve_eigen_2d(const Operator2D& op);

class LogField2D {
public:
  // Throws NonPositiveValue when any value is at or below the 1e-300 floor.
  LogField2D(std::shared_ptr<const Grid2D> grid, const Eigen::VectorXd& u);

  double value(const Vec& p) const;
  Vec grad(const Vec& p) const;
  bool near_boundary(const Vec& p) const;  // within 2h of the boundary
  double h() const { return grid_->h; }

private:
  double interp_logu(const Vec& p) const;
  std::shared_ptr<const Grid2D> grid_;
  std::vector<double> logu_;
};

LogField2D log_field(const GridSolution& sol, double t);
LogField2D log_field(const EigenSolution2D& sol);

} // namespace segray
