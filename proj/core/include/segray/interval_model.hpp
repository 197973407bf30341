#pragma once

// 1D model problems on [-L, L]: the first Dirichlet eigenpair of
// -d^2/ds^2 + qbar and the parabolic evolution, plus the log-slope evaluator
// fbar_s(s,t) = -(log ubar)_s that the comparison bounds are built from.

#include <functional>
#include <optional>

#include "segray/heat.hpp"
#include "segray/scalar_field.hpp"

namespace segray {

struct IntervalGrid {
  double L = 0;
  int m = 0;       // interior nodes
  double h = 0;    // 2L / (m + 1)
  double node(int j) const { return -L + (j + 1) * h; }
};

struct Interval1DSolution {
  IntervalGrid grid;
  Potential1D qbar;
  TimeSeries series;             // eigen mode stores one state at t = 0
  std::optional<double> lambda;  // eigen mode only
  bool eigen_mode = false;
};

// Checks a sampled function for evenness on [-L, L]; tolerance 1e-10.
bool is_even(const std::function<double(double)>& f, double L,
             int samples = 101, double tol = 1e-10);

// -u'' + qbar u = lambda u, first eigenpair.  qbar must be even.
Interval1DSolution solve_1d_model_eigen(const Potential1D& qbar, double L,
                                        int nodes = 2001);

struct Model1DOptions {
  int nodes = 2001;
  double dt = 1e-3;
  double t_end = 0.2;
  std::vector<double> store_times;
  Scheme scheme = Scheme::CrankNicolson;
};

// ubar_t - ubar_ss + qbar ubar = 0 with Dirichlet data; u0 must be even and
// positive.
Interval1DSolution solve_1d_model_heat(const Potential1D& qbar, double L,
                                       const std::function<double(double)>& u0,
                                       const Model1DOptions& opt);

// fbar_s at one time level: fourth-order centered differences of
// -log(ubar) on the node set, cubic interpolation between nodes.  Valid for
// |s| <= L - 5h; throws OutsideDomain beyond that.
class LogSlope1D {
public:
  LogSlope1D(const Interval1DSolution& sol, double t);
  double operator()(double s) const;
  double fbar(double s) const;  // -log ubar, cubic interpolation
  const IntervalGrid& grid() const { return grid_; }
  double s_max() const { return grid_.L - 5.0 * grid_.h; }

private:
  double interp(const std::vector<double>& v, double s) const;
  IntervalGrid grid_;
  std::vector<double> fbar_, fs_;
};

} // namespace segray
