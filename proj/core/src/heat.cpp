#include "segray/heat.hpp"

#include <Eigen/IterativeLinearSolvers>
#include <algorithm>
#include <cmath>

#include "segray/errors.hpp"

namespace segray {

int TimeSeries::snapshot_index(double t, double tol) const {
  for (std::size_t k = 0; k < times.size(); ++k)
    if (std::fabs(times[k] - t) <= tol) return static_cast<int>(k);
  throw TimeMismatch("no stored snapshot at t = " + std::to_string(t));
}

std::string scheme_name(Scheme s) {
  return s == Scheme::CrankNicolson ? "crank-nicolson" : "implicit-euler";
}

namespace {

bool is_tridiagonal(const Eigen::SparseMatrix<double>& M) {
  for (int k = 0; k < M.outerSize(); ++k)
    for (Eigen::SparseMatrix<double>::InnerIterator it(M, k); it; ++it)
      if (std::abs(it.row() - it.col()) > 1) return false;
  return true;
}

Eigen::VectorXd solve_tridiag(const Eigen::SparseMatrix<double>& M,
                              const Eigen::VectorXd& b) {
  const int n = static_cast<int>(M.rows());
  Eigen::VectorXd dl(n), d(n), du(n);
  dl.setZero();
  d.setZero();
  du.setZero();
  for (int k = 0; k < M.outerSize(); ++k)
    for (Eigen::SparseMatrix<double>::InnerIterator it(M, k); it; ++it) {
      if (it.row() == it.col()) d[it.row()] = it.value();
      else if (it.row() == it.col() + 1) dl[it.row()] = it.value();
      else du[it.row()] = it.value();
    }
  // Thomas elimination.
  Eigen::VectorXd c(n), rhs = b;
  c[0] = du[0] / d[0];
  rhs[0] = rhs[0] / d[0];
  for (int i = 1; i < n; ++i) {
    const double m = 1.0 / (d[i] - dl[i] * c[i - 1]);
    c[i] = du[i] * m;
    rhs[i] = (rhs[i] - dl[i] * rhs[i - 1]) * m;
  }
  for (int i = n - 2; i >= 0; --i) rhs[i] -= c[i] * rhs[i + 1];
  return rhs;
}

} // namespace

Eigen::VectorXd solve_spd(const Eigen::SparseMatrix<double>& M,
                          const Eigen::VectorXd& b,
                          const Eigen::VectorXd* warm_start,
                          double abs_residual) {
  if (is_tridiagonal(M)) return solve_tridiag(M, b);

  Eigen::ConjugateGradient<Eigen::SparseMatrix<double>,
                           Eigen::Lower | Eigen::Upper,
                           Eigen::DiagonalPreconditioner<double>>
      cg;
  cg.compute(M);
  const double bnorm = b.norm();
  const double rel = bnorm > 0 ? abs_residual / bnorm : abs_residual;
  cg.setTolerance(std::clamp(rel, 1e-14, 1e-1));
  cg.setMaxIterations(50000);
  Eigen::VectorXd x;
  if (warm_start)
    x = cg.solveWithGuess(b, *warm_start);
  else
    x = cg.solve(b);
  if ((M * x - b).norm() > abs_residual * 10.0 + 1e-30)
    throw SolverDiverged("conjugate gradient residual " +
                         std::to_string((M * x - b).norm()));
  return x;
}

namespace {

TimeSeries run_scheme(const Eigen::SparseMatrix<double>& A,
                      const Eigen::VectorXd& u0, double dt, double t_end,
                      Scheme scheme, const std::vector<double>& store_times,
                      double q_min, bool* positivity_ok) {
  const int n = static_cast<int>(A.rows());
  Eigen::SparseMatrix<double> id(n, n);
  id.setIdentity();

  Eigen::SparseMatrix<double> lhs, rhs_mat;
  if (scheme == Scheme::CrankNicolson) {
    lhs = id + (0.5 * dt) * A;
    rhs_mat = id - (0.5 * dt) * A;
  } else {
    lhs = id + dt * A;
  }
  lhs.makeCompressed();

  const long steps = std::lround(t_end / dt);
  auto want_store = [&](double t) {
    for (double ts : store_times)
      if (std::fabs(ts - t) <= 1e-9 * std::max(1.0, t_end)) return true;
    return false;
  };

  TimeSeries out;
  out.scheme_used = scheme;
  out.min_value = u0.minCoeff();
  out.times.push_back(0.0);
  out.states.push_back(u0);

  Eigen::VectorXd u = u0;
  *positivity_ok = u.minCoeff() > 0;
  for (long k = 1; k <= steps && *positivity_ok; ++k) {
    const double prev_max = u.maxCoeff();
    const Eigen::VectorXd b =
        scheme == Scheme::CrankNicolson ? (rhs_mat * u).eval() : u;
    u = solve_spd(lhs, b, &u);
    const double t = dt * k;

    if (u.minCoeff() <= 0) {
      *positivity_ok = false;
      out.min_value = std::min(out.min_value, u.minCoeff());
      break;
    }
    if (scheme == Scheme::ImplicitEuler && q_min >= 0 &&
        u.maxCoeff() > prev_max * (1.0 + 1e-12) + 1e-12)
      throw NonPositiveState("discrete maximum principle violated at t = " +
                             std::to_string(t));
    out.min_value = std::min(out.min_value, u.minCoeff());
    if (want_store(t) || k == steps) {
      out.times.push_back(t);
      out.states.push_back(u);
    }
  }
  return out;
}

} // namespace

TimeSeries heat_solve(const Eigen::SparseMatrix<double>& A,
                      const Eigen::VectorXd& u0, double dt, double t_end,
                      Scheme scheme, const std::vector<double>& store_times,
                      double q_min) {
  if (u0.minCoeff() <= 0)
    throw NonPositiveState("heat_solve: initial data not strictly positive");
  if (dt <= 0) throw SolverDiverged("heat_solve: dt must be positive");

  bool ok = false;
  TimeSeries out = run_scheme(A, u0, dt, t_end, scheme, store_times, q_min, &ok);
  if (ok) return out;

  if (scheme == Scheme::CrankNicolson) {
    // Oscillation killed positivity; redo monotonically.
    bool ok2 = false;
    TimeSeries again = run_scheme(A, u0, dt, t_end, Scheme::ImplicitEuler,
                                  store_times, q_min, &ok2);
    again.fallback_applied = true;
    if (ok2) return again;
    throw NonPositiveState("non-positive state under implicit Euler fallback");
  }
  throw NonPositiveState("non-positive state at first offending time; min = " +
                         std::to_string(out.min_value));
}

} // namespace segray
