#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "segray/errors.hpp"
#include "segray/grid2d.hpp"
#include "segray/interval_model.hpp"
#include "segray/log_field.hpp"
#include "segray/sampling.hpp"
#include "segray/spectral.hpp"

using namespace segray;

namespace {

std::shared_ptr<const ConvexDomain> disc_ptr(double r = 1.0) {
  return std::make_shared<ConvexDomain>(make_disc(r));
}

} // namespace

TEST_SUITE("pde") {

TEST_CASE("grid rejects coarse spacing and marks stencil fractions") {
  CHECK_THROWS_AS(build_grid(disc_ptr(), 0.5), GridTooCoarse);

  const auto grid = build_grid(disc_ptr(), 0.05);
  CHECK(grid->interior_count() >= 200);
  for (int i = 0; i < grid->interior_count(); ++i) {
    CHECK(grid->domain->phi(grid->point(i)) > 0);
    for (int a = 0; a < 4; ++a) {
      if (grid->stencil[i].nbr[a] < 0) {
        CHECK(grid->stencil[i].frac[a] > 0);
        CHECK(grid->stencil[i].frac[a] <= 1.0);
      }
    }
  }
}

TEST_CASE("discrete laplacian annihilates linear functions on full stencils") {
  const auto grid = build_grid(disc_ptr(), 0.05);
  const Operator2D op = build_operator(grid, *make_zero_field(2));
  Eigen::VectorXd f(grid->interior_count());
  for (int i = 0; i < grid->interior_count(); ++i) {
    const Vec p = grid->point(i);
    f[i] = 0.7 * p[0] - 1.3 * p[1] + 0.25;
  }
  const Eigen::VectorXd Af = op.matrix * f;
  for (int i = 0; i < grid->interior_count(); ++i) {
    bool full = true;
    for (int a = 0; a < 4; ++a)
      if (grid->stencil[i].nbr[a] < 0) full = false;
    if (full) CHECK(std::fabs(Af[i]) < 1e-10);
  }
}

TEST_CASE("operator consistency on the disc") {
  const double h = 0.02;
  const auto grid = build_grid(disc_ptr(), h);
  const Operator2D op = build_operator(grid, *make_zero_field(2));

  // f = 1 - |x|^2 vanishes on the boundary; -Delta f = 4 and the scheme is
  // exact on quadratics away from cut cells.
  Eigen::VectorXd f(grid->interior_count());
  for (int i = 0; i < grid->interior_count(); ++i)
    f[i] = 1.0 - dot(grid->point(i), grid->point(i));
  const Eigen::VectorXd Af = op.matrix * f;
  for (int i = 0; i < grid->interior_count(); ++i) {
    bool full = true;
    for (int a = 0; a < 4; ++a)
      if (grid->stencil[i].nbr[a] < 0) full = false;
    if (full) CHECK(Af[i] == doctest::Approx(4.0).epsilon(1e-9));
  }

  // Constant q adds exactly q * f to the stencil output.
  const Operator2D opc = build_operator(grid, *make_constant_field(2, 2.5));
  const Eigen::VectorXd Acf = opc.matrix * f;
  for (int i = 0; i < grid->interior_count(); ++i)
    CHECK(Acf[i] - Af[i] == doctest::Approx(2.5 * f[i]).epsilon(1e-12));
}

TEST_CASE("harmonic polynomial on the ellipse interior") {
  const auto dom = std::make_shared<ConvexDomain>(make_ellipse({2.0, 1.0}));
  const double h = 0.02;
  const auto grid = build_grid(dom, h);
  const Operator2D op = build_operator(grid, *make_zero_field(2));
  Eigen::VectorXd f(grid->interior_count());
  for (int i = 0; i < grid->interior_count(); ++i) {
    const Vec p = grid->point(i);
    f[i] = p[0] * p[1];
  }
  const Eigen::VectorXd Af = op.matrix * f;
  // x1 x2 is harmonic: interior truncation is O(h^2) (zero here, the scheme
  // is exact on quadratics).
  for (int i = 0; i < grid->interior_count(); ++i) {
    bool full = true;
    for (int a = 0; a < 4; ++a)
      if (grid->stencil[i].nbr[a] < 0) full = false;
    if (full) CHECK(std::fabs(Af[i]) < 1e-9);
  }
}

TEST_CASE("1d reference solution of the heat equation") {
  // Interval [-pi/2, pi/2], q = 0, u0 = cos s: u = e^{-t} cos s.
  const double L = M_PI_2;
  Model1DOptions opt;
  opt.nodes = 3141;
  opt.dt = 1e-4;
  opt.t_end = 0.5;
  opt.store_times = {0.5};
  const Interval1DSolution sol = solve_1d_model_heat(
      make_zero_potential1d(), L, [](double s) { return std::cos(s); }, opt);

  const int idx = sol.series.snapshot_index(0.5);
  double worst = 0;
  for (int j = 0; j < sol.grid.m; ++j) {
    const double want = std::exp(-0.5) * std::cos(sol.grid.node(j));
    worst = std::max(worst, std::fabs(sol.series.states[idx][j] - want));
  }
  CHECK(worst < 1e-3);
}

TEST_CASE("eigenvector initial data decays by the discrete factor") {
  const auto grid = build_grid(disc_ptr(), 0.05);
  const Operator2D op = build_operator(grid, *make_zero_field(2));
  const EigenPair ep = eigen_smallest(op.matrix);

  const double dt = 1e-3;
  const int steps = 20;
  TimeSeries ts = heat_solve(op.matrix, ep.vec, dt, steps * dt,
                             Scheme::CrankNicolson, {steps * dt}, 0.0);
  // CN propagates an eigenvector by ((1 - dt l/2)/(1 + dt l/2))^k exactly.
  const double factor =
      std::pow((1.0 - 0.5 * dt * ep.lambda) / (1.0 + 0.5 * dt * ep.lambda), steps);
  const int idx = ts.snapshot_index(steps * dt);
  double worst = 0;
  for (int i = 0; i < ep.vec.size(); ++i)
    worst = std::max(worst, std::fabs(ts.states[idx][i] - factor * ep.vec[i]));
  CHECK(worst < 1e-7);
}

TEST_CASE("constant potential acts as a gauge factor") {
  const auto grid = build_grid(disc_ptr(), 0.05);
  const Operator2D op0 = build_operator(grid, *make_zero_field(2));
  const double c = 1.7;
  const Operator2D opc = build_operator(grid, *make_constant_field(2, c));

  // Smooth, boundary-compatible data keeps stiff transients out; the gauge
  // relation only holds exactly for the continuous semigroup.
  Eigen::VectorXd u0(grid->interior_count());
  for (int i = 0; i < grid->interior_count(); ++i) {
    const double p = 1.0 - dot(grid->point(i), grid->point(i));
    u0[i] = p * p + 1e-6;
  }

  const double dt = 1e-4, t_end = 0.05;
  const TimeSeries a = heat_solve(op0.matrix, u0, dt, t_end,
                                  Scheme::CrankNicolson, {t_end}, 0.0);
  const TimeSeries b = heat_solve(opc.matrix, u0, dt, t_end,
                                  Scheme::CrankNicolson, {t_end}, c);
  const int ia = a.snapshot_index(t_end), ib = b.snapshot_index(t_end);
  double worst = 0;
  for (int i = 0; i < u0.size(); ++i)
    worst = std::max(worst, std::fabs(b.states[ib][i] -
                                      std::exp(-c * t_end) * a.states[ia][i]));
  CHECK(worst < 1e-6);
}

TEST_CASE("discrete maximum principle under implicit euler") {
  const auto grid = build_grid(disc_ptr(), 0.05);
  const Operator2D op = build_operator(grid, *make_zero_field(2));
  Eigen::VectorXd u0(grid->interior_count());
  SplitMix rng(41);
  for (int i = 0; i < u0.size(); ++i) u0[i] = 0.1 + rng.uniform();
  const TimeSeries ts = heat_solve(op.matrix, u0, 1e-3, 0.02,
                                   Scheme::ImplicitEuler, {0.01, 0.02}, 0.0);
  for (std::size_t k = 1; k < ts.states.size(); ++k)
    CHECK(ts.states[k].maxCoeff() <= ts.states[k - 1].maxCoeff() * (1 + 1e-12));
}

TEST_CASE("crank-nicolson falls back when oscillation kills positivity") {
  const auto grid = build_grid(disc_ptr(), 0.05);
  const Operator2D op = build_operator(grid, *make_zero_field(2));
  // Spike data plus a huge step make CN alternate signs.
  Eigen::VectorXd u0 = Eigen::VectorXd::Constant(grid->interior_count(), 1e-8);
  u0[grid->interior_count() / 2] = 1.0;
  const TimeSeries ts = heat_solve(op.matrix, u0, 0.05, 0.1,
                                   Scheme::CrankNicolson, {0.1}, 0.0);
  CHECK(ts.scheme_used == Scheme::ImplicitEuler);
  CHECK(ts.fallback_applied);
  CHECK(ts.min_value > 0);
}

TEST_CASE("interval eigenpair matches cos") {
  const Interval1DSolution sol =
      solve_1d_model_eigen(make_zero_potential1d(), M_PI_2, 2000);
  CHECK(std::fabs(*sol.lambda - 1.0) < 1e-4);

  // Eigenfunction matches cos s in sup norm after max-normalization.
  double worst = 0;
  for (int j = 0; j < sol.grid.m; ++j)
    worst = std::max(worst, std::fabs(sol.series.states[0][j] -
                                      std::cos(sol.grid.node(j))));
  CHECK(worst < 1e-4);
}

TEST_CASE("potential shift moves the eigenvalue exactly") {
  const auto grid = build_grid(disc_ptr(), 0.06);
  const Operator2D op0 = build_operator(grid, *make_zero_field(2));
  const Operator2D opc = build_operator(grid, *make_constant_field(2, 3.25));
  const EigenPair e0 = eigen_smallest(op0.matrix);
  const EigenPair ec = eigen_smallest(opc.matrix);
  CHECK(ec.lambda - e0.lambda == doctest::Approx(3.25).epsilon(1e-9));
  double worst = 0;
  for (int i = 0; i < e0.vec.size(); ++i)
    worst = std::max(worst, std::fabs(e0.vec[i] - ec.vec[i]));
  CHECK(worst < 1e-6);
}

TEST_CASE("negative potential handled by internal shift") {
  const auto grid = build_grid(disc_ptr(), 0.06);
  const Operator2D op = build_operator(grid, *make_constant_field(2, -8.0));
  const EigenPair ep = eigen_smallest(op.matrix);
  CHECK(ep.lambda < 0);  // 5.78 - 8 < 0: matrix indefinite before the shift
  CHECK(ep.residual < 1e-8);
}

TEST_CASE("disc eigenvalue converges with order at least one") {
  const double lam = oracles::disc_lambda1();
  std::vector<double> errs;
  for (double h : {0.08, 0.04, 0.02}) {
    const EigenPair ep =
        eigen_smallest(build_operator(build_grid(disc_ptr(), h),
                                      *make_zero_field(2))
                           .matrix);
    CHECK(ep.lambda > 0);
    CHECK(ep.residual < 1e-8);
    errs.push_back(std::fabs(ep.lambda - lam));
  }
  CHECK(oracles::richardson_slope(errs) >= 1.0);
  CHECK(errs.back() / lam < 0.01);
}

TEST_CASE("quartic domain eigenvalue respects domain monotonicity") {
  // {x^4 + y^4 < 1} contains the unit disc, so its first eigenvalue is
  // smaller; both solves run on the same cut-cell machinery.
  const auto quartic = std::make_shared<ConvexDomain>(make_quartic({1.0, 1.0}));
  const EigenPair eq = eigen_smallest(
      build_operator(build_grid(quartic, 0.04), *make_zero_field(2)).matrix);
  const EigenPair ed = eigen_smallest(
      build_operator(build_grid(disc_ptr(), 0.04), *make_zero_field(2)).matrix);
  CHECK(eq.lambda > 0);
  CHECK(eq.residual < 1e-8);
  CHECK(eq.lambda < ed.lambda);
}

TEST_CASE("log field recovers an analytic gradient") {
  const double h = 0.02;
  const auto grid = build_grid(disc_ptr(), h);
  Eigen::VectorXd u(grid->interior_count());
  for (int i = 0; i < grid->interior_count(); ++i)
    u[i] = std::exp(-dot(grid->point(i), grid->point(i)));
  const LogField2D f(grid, u);

  SplitMix rng(43);
  double worst = 0;
  for (int k = 0; k < 200; ++k) {
    Vec p(rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5));
    const Vec g = f.grad(p);
    worst = std::max(worst, norm(g - 2.0 * p));
  }
  CHECK(worst < 10.0 * h * h);

  // Constant u has exactly zero gradient.
  Eigen::VectorXd ones = Eigen::VectorXd::Ones(grid->interior_count());
  const LogField2D fc(grid, ones);
  CHECK(norm(fc.grad(Vec(0.3, -0.2))) == doctest::Approx(0.0));

  CHECK(f.near_boundary(Vec(0.99, 0.0)));
  CHECK_FALSE(f.near_boundary(Vec(0.0, 0.0)));
  CHECK_THROWS_AS(f.value(Vec(1.5, 0.0)), OutsideDomain);
}

TEST_CASE("eigen log field gradient points outward") {
  const EigenSolution2D sol =
      solve_eigen_2d(build_operator(build_grid(disc_ptr(), 0.04),
                                    *make_zero_field(2)));
  const LogField2D f = log_field(sol);
  SplitMix rng(47);
  for (int k = 0; k < 100; ++k) {
    const double ang = rng.uniform(0, 2 * M_PI);
    const double rho = rng.uniform(0.2, 0.8);
    const Vec p(rho * std::cos(ang), rho * std::sin(ang));
    CHECK(dot(f.grad(p), normalized(p)) > 0);
  }
}

TEST_CASE("1d model slope oracles") {
  // qbar = 0, L = pi/2: fbar_s = tan s.
  const Interval1DSolution a =
      solve_1d_model_eigen(make_zero_potential1d(), M_PI_2, 2001);
  const LogSlope1D fsa(a, 0.0);
  double worst = 0;
  for (double s = -1.4; s <= 1.4; s += 0.02)
    worst = std::max(worst, std::fabs(fsa(s) - std::tan(s)));
  CHECK(worst < 1e-4);

  // qbar = 0, L = 1: fbar_s = (pi/2) tan(pi s / 2).
  const Interval1DSolution b =
      solve_1d_model_eigen(make_zero_potential1d(), 1.0, 2001);
  const LogSlope1D fsb(b, 0.0);
  worst = 0;
  for (double s = -0.9; s <= 0.9; s += 0.01)
    worst = std::max(worst,
                     std::fabs(fsb(s) - M_PI_2 * std::tan(M_PI_2 * s)));
  CHECK(worst < 1e-4);

  CHECK(std::fabs(fsa(0.0)) < 1e-10);  // odd slope of an even solution
  CHECK_THROWS_AS(fsa(M_PI_2), OutsideDomain);
}

TEST_CASE("even data stays even under the 1d scheme") {
  Model1DOptions opt;
  opt.nodes = 501;
  opt.dt = 1e-3;
  opt.t_end = 0.1;
  opt.store_times = {0.05, 0.1};
  const Interval1DSolution sol = solve_1d_model_heat(
      make_quadratic_potential1d(0.5), 1.0,
      [](double s) { return std::exp(-s * s); }, opt);
  for (const auto& state : sol.series.states) {
    double worst = 0;
    for (int j = 0; j < sol.grid.m; ++j)
      worst = std::max(worst,
                       std::fabs(state[j] - state[sol.grid.m - 1 - j]));
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("odd potential rejected") {
  Potential1D q;
  q.value = [](double s) { return s; };
  CHECK_THROWS_AS(solve_1d_model_eigen(q, 1.0, 101), NotEven);
}

} // TEST_SUITE
