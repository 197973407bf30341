#pragma once

// Time stepping for u_t = -A u where A ~ -Laplacian + q with Dirichlet
// conditions eliminated.  Crank-Nicolson is the default; when it produces a
// non-positive state the run is redone with implicit Euler, whose M-matrix
// structure restores monotonicity.  Linear systems are solved by diagonally
// preconditioned conjugate gradients (tridiagonal systems by direct
// elimination) to residual < 1e-10.

#include <Eigen/Sparse>
#include <string>
#include <vector>

namespace segray {

enum class Scheme { CrankNicolson, ImplicitEuler };

struct TimeSeries {
  std::vector<double> times;
  std::vector<Eigen::VectorXd> states;
  Scheme scheme_used = Scheme::CrankNicolson;
  bool fallback_applied = false;
  double min_value = 0;  // over all stored states

  // Index of the snapshot at time t; throws TimeMismatch when absent.
  int snapshot_index(double t, double tol = 1e-9) const;
};

// Steps u0 to t_end with step dt, storing t = 0, t = t_end and every
// requested time (which must align with the step grid).  Requires u0 > 0.
// Asserts the discrete maximum principle on implicit-Euler runs with
// q_min >= 0; throws NonPositiveState when positivity fails even under
// implicit Euler.
TimeSeries heat_solve(const Eigen::SparseMatrix<double>& A,
                      const Eigen::VectorXd& u0, double dt, double t_end,
                      Scheme scheme, const std::vector<double>& store_times = {},
                      double q_min = 0.0);

// Solves M x = b for symmetric positive definite M: direct elimination when M
// is tridiagonal, otherwise Jacobi-preconditioned CG with warm start.
Eigen::VectorXd solve_spd(const Eigen::SparseMatrix<double>& M,
                          const Eigen::VectorXd& b,
                          const Eigen::VectorXd* warm_start = nullptr,
                          double abs_residual = 1e-10);

std::string scheme_name(Scheme s);

} // namespace segray
