#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "segray/domain.hpp"
#include "segray/errors.hpp"
#include "segray/ray_energy.hpp"
#include "segray/sampling.hpp"

using namespace segray;

namespace {

QuadratureRule default_rule() {
  QuadratureRule r;
  r.panels = 4;
  r.nodes_per_panel = 12;
  return r;
}

std::vector<std::pair<Vec, Vec>> disc_pairs(int count, std::uint64_t seed,
                                            double min_r = 0.15) {
  const ConvexDomain disc = make_disc(1.0);
  PointSampler sampler(disc, 0.0, seed);
  std::vector<std::pair<Vec, Vec>> pairs;
  for (int k = 0; k < count; ++k) pairs.push_back(sampler.draw_pair(min_r));
  return pairs;
}

} // namespace

TEST_SUITE("rayenergy") {

TEST_CASE("gauss-legendre exactness") {
  // Degree 2n-1 polynomial integrated exactly for every supported order.
  for (int nodes = 4; nodes <= 16; ++nodes) {
    QuadratureRule rule;
    rule.panels = 1;
    rule.nodes_per_panel = nodes;
    const int deg = 2 * nodes - 1;
    auto fn = [deg](double s) { return std::pow(s, deg); };
    const double got = integrate_segment(fn, 1.0, rule);
    const double want = 1.0 / (deg + 1);
    CHECK(std::fabs(got - want) / std::fabs(want) < 1e-13);
  }
}

TEST_CASE("panel doubling changes smooth results below tolerance") {
  QuadratureRule rule = default_rule();
  auto fn = [](double s) { return std::sin(3.0 * s) + s * s; };
  const double a = integrate_segment(fn, 2.0, rule);
  rule.panels *= 2;
  const double b = integrate_segment(fn, 2.0, rule);
  CHECK(std::fabs(a - b) < 1e-12 * std::max(1.0, std::fabs(a)));
}

TEST_CASE("adaptive refinement cap") {
  QuadratureRule rule;
  rule.panels = 1;
  rule.nodes_per_panel = 4;
  rule.adaptive = true;
  rule.refine_tol = 1e-15;
  rule.max_panels = 8;
  // Integrand rough enough that 8 panels of 4 nodes cannot settle to 1e-15.
  auto fn = [](double s) { return 1.0 / (1e-3 + s * s); };
  CHECK_THROWS_AS(integrate_segment(fn, 1.0, rule), QuadratureNotConverged);
}

TEST_CASE("energy examples") {
  const QuadratureRule rule = default_rule();
  const auto id = make_constant_tensor(SymMat::identity(2));
  CHECK(std::fabs(energy(*id, Vec(0, 0), Vec(3, 4), rule) - 5.0) < 1e-12);

  // conformal g = x1 over the unit x-axis chord: integral of s ds = 1/2.
  const auto g = make_conformal_tensor(make_polynomial(2, {{1.0, {1, 0, 0}}}));
  CHECK(std::fabs(energy(*g, Vec(0, 0), Vec(1, 0), rule) - 0.5) < 1e-12);

  // hessian of |x|^2/2 = identity: energy is r for any pair.
  const auto hq = make_hessian_tensor(
      make_polynomial(2, {{0.5, {2, 0, 0}}, {0.5, {0, 2, 0}}}));
  CHECK(std::fabs(energy(*hq, Vec(-1, 2), Vec(2, -2), rule) - 5.0) < 1e-12);

  CHECK_THROWS_AS(energy(*id, Vec(1, 1), Vec(1, 1), rule), DegenerateSegment);
}

TEST_CASE("energy symmetry and additivity") {
  const QuadratureRule rule = default_rule();
  const auto tau = make_conformal_tensor(make_plane_wave(Vec(1.2, 0.8), 1.0, 0.3));
  SplitMix rng(29);
  double worst = 0;
  for (int k = 0; k < 1000; ++k) {
    const Vec x(rng.uniform(-1, 1), rng.uniform(-1, 1));
    const Vec y(rng.uniform(-1, 1), rng.uniform(-1, 1));
    if (norm(y - x) < 0.05) continue;
    worst = std::max(worst, std::fabs(energy(*tau, x, y, rule) -
                                      energy(*tau, y, x, rule)));
  }
  CHECK(worst < 1e-12);

  // Collinear split.
  const Vec x(-0.8, 0.1), y(0.9, 0.7);
  const Vec z = x + 0.37 * (y - x);
  const double whole = energy(*tau, x, y, rule);
  const double split = energy(*tau, x, z, rule) + energy(*tau, z, y, rule);
  CHECK(std::fabs(whole - split) < 1e-11);
}

TEST_CASE("gradient difference examples") {
  // f = |x|^2/2.
  auto grad_q = [](const Vec& x) { return x; };
  CHECK(energy_by_gradient_difference(grad_q, Vec(0, 0), Vec(3, 4)) ==
        doctest::Approx(5.0));

  // f = x1^2.
  auto grad_sq = [](const Vec& x) { return Vec(2.0 * x[0], 0.0); };
  CHECK(energy_by_gradient_difference(grad_sq, Vec(0, 0), Vec(1, 0)) ==
        doctest::Approx(2.0));

  // f = -log cos x1 along the axis from -a to a: 2 tan a.
  const LogCosField lc(2, 1.0);
  const double a = 0.9;
  auto grad_lc = [&lc](const Vec& x) { return lc.gradient(x); };
  CHECK(energy_by_gradient_difference(grad_lc, Vec(-a, 0), Vec(a, 0)) ==
        doctest::Approx(2.0 * std::tan(a)).epsilon(1e-12));
}

TEST_CASE("quadrature agrees with gradient difference for hessian fields") {
  QuadratureRule rule;
  rule.panels = 8;
  rule.nodes_per_panel = 12;
  rule.adaptive = true;
  rule.refine_tol = 1e-13;
  const auto f = make_polynomial(2, {{1.0, {4, 0, 0}}, {1.0, {0, 2, 0}}});
  const auto tau = make_hessian_tensor(f);
  SplitMix rng(31);
  double worst = 0;
  for (int k = 0; k < 1000; ++k) {
    const Vec x(rng.uniform(-1, 1), rng.uniform(-1, 1));
    const Vec y(rng.uniform(-1, 1), rng.uniform(-1, 1));
    if (norm(y - x) < 0.05) continue;
    const double eq = energy(*tau, x, y, rule);
    const double eg = energy_by_gradient_difference(
        [&](const Vec& p) { return f->gradient(p); }, x, y);
    worst = std::max(worst, std::fabs(eq - eg));
  }
  CHECK(worst < 10.0 * rule.refine_tol);
}

TEST_CASE("identity rhs worked examples") {
  const QuadratureRule rule = default_rule();

  // Thm 2.3 i=n with constant identity tau on a chord of length 2: -2.
  const auto id = make_constant_tensor(SymMat::identity(2));
  const SegmentFrame f2 = segment_frame(Vec(0, 0), Vec(2, 0));
  CHECK(identity_rhs({IdentityId::Thm23N, 2}, *id, f2, rule) ==
        doctest::Approx(-2.0).epsilon(1e-13));

  // Thm 2.2 with constant tau: zero for every i.
  CHECK(identity_rhs({IdentityId::Thm22, 1}, *id, f2, rule) ==
        doctest::Approx(0.0));
  CHECK(identity_rhs({IdentityId::Thm22, 2}, *id, f2, rule) ==
        doctest::Approx(0.0));

  // Thm 2.3 i<n with conformal g = x2 on the unit x-axis chord:
  // E term = 1, correction = 1, total 0 (closed-form oracle).
  const auto gy = make_conformal_tensor(make_polynomial(2, {{1.0, {0, 1, 0}}}));
  const SegmentFrame f1 = segment_frame(Vec(0, 0), Vec(1, 0));
  CHECK(identity_rhs({IdentityId::Thm23Lower, 1}, *gy, f1, rule) ==
        doctest::Approx(0.0).epsilon(1e-13));
}

TEST_CASE("identity fd worked examples") {
  const QuadratureRule rule = default_rule();
  const auto id = make_constant_tensor(SymMat::identity(2));
  const SegmentFrame f2 = segment_frame(Vec(0, 0), Vec(2, 0));

  // E under the Etilde_n shift is r - 2h: FD = -2 exactly.
  CHECK(identity_fd({IdentityId::Thm23N, 2}, *id, f2, rule, 1e-3) ==
        doctest::Approx(-2.0).epsilon(1e-10));

  // Thm 2.4 with constant tau: second difference of r along E_i is 0.
  CHECK(std::fabs(identity_fd({IdentityId::Thm24, 1}, *id, f2, rule, 1e-3)) <
        1e-8);

  // Thm 2.5 with conformal g = x1^2 along an x-axis chord: both routes give
  // E_{grad_n grad_n tau} = 2r.
  const auto gx2 = make_conformal_tensor(make_polynomial(2, {{1.0, {2, 0, 0}}}));
  const SegmentFrame f3 = segment_frame(Vec(0.2, 0), Vec(1.7, 0));
  const double rhs = identity_rhs({IdentityId::Thm25, 2}, *gx2, f3, rule);
  CHECK(rhs == doctest::Approx(2.0 * f3.r).epsilon(1e-12));
  CHECK(identity_fd({IdentityId::Thm25, 2}, *gx2, f3, rule, 2e-3) ==
        doctest::Approx(rhs).epsilon(1e-6));
}

TEST_CASE("identity suite on tensor families") {
  const QuadratureRule rule = default_rule();
  const double h = 2e-3;

  const auto pairs = disc_pairs(100, 101);

  // Constant tensor: both sides constant or zero.  Second differences sit at
  // the eps/h^2 roundoff floor, so well-separated pairs and a larger step
  // keep the floor below 1e-10.
  const auto id = make_constant_tensor(SymMat::identity(2));
  const IdentitySuiteResult r1 =
      identity_suite(*id, disc_pairs(100, 100, 0.5), rule, 0.02);
  CHECK(r1.pass);
  CHECK(r1.max_rel_err < 1e-10);

  // conformal g = x1 x2.
  const auto gxy = make_conformal_tensor(make_polynomial(2, {{1.0, {1, 1, 0}}}));
  const IdentitySuiteResult r2 = identity_suite(*gxy, pairs, rule, h);
  CHECK(r2.pass);
  CHECK(r2.max_rel_err < 1e-5);

  // hessian of x1^4 + x2^2.
  const auto hx = make_hessian_tensor(
      make_polynomial(2, {{1.0, {4, 0, 0}}, {1.0, {0, 2, 0}}}));
  const IdentitySuiteResult r3 = identity_suite(*hx, pairs, rule, h);
  CHECK(r3.pass);
  CHECK(r3.max_rel_err < 1e-5);
}

TEST_CASE("identity suite in three dimensions") {
  const QuadratureRule rule = default_rule();
  // Both lower-index branches of the Etilde identity are live when n = 3.
  const auto tau = make_conformal_tensor(
      make_plane_wave(Vec(0.9, -0.5, 0.4), 1.0, 0.2));
  SplitMix rng(303);
  std::vector<std::pair<Vec, Vec>> pairs;
  while (pairs.size() < 20) {
    const Vec x(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
    const Vec y(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
    if (norm(y - x) >= 0.3) pairs.emplace_back(x, y);
  }
  CHECK(applicable_identities(3).size() == 10);
  const IdentitySuiteResult res = identity_suite(*tau, pairs, rule, 2e-3);
  CHECK(res.pass);
  CHECK(res.max_rel_err < 1e-5);
}

TEST_CASE("identity suite aggregates per-pair failures") {
  const QuadratureRule rule = default_rule();
  const auto id = make_constant_tensor(SymMat::identity(2));
  std::vector<std::pair<Vec, Vec>> pairs = {{Vec(0, 0), Vec(1, 0)},
                                            {Vec(0.5, 0.5), Vec(0.5, 0.5)}};
  const IdentitySuiteResult res = identity_suite(*id, pairs, rule, 2e-3);
  CHECK_FALSE(res.pass);
  bool saw_failure = false;
  for (const auto& rep : res.reports)
    if (!rep.ok) {
      saw_failure = true;
      CHECK(rep.error == "DegenerateSegment");
    }
  CHECK(saw_failure);
}

TEST_CASE("first-order identity convergence slopes") {
  const QuadratureRule rule = default_rule();
  const auto tau = make_hessian_tensor(
      make_polynomial(2, {{1.0, {4, 0, 0}}, {1.0, {0, 2, 0}}}));
  const auto pairs = disc_pairs(10, 202, 0.5);

  for (const auto& [x, y] : pairs) {
    const SegmentFrame frame = segment_frame(x, y);
    for (const auto& idy : applicable_identities(2)) {
      if (idy.kind == IdentityId::Thm24 || idy.kind == IdentityId::Thm25)
        continue;
      const double rhs = identity_rhs(idy, *tau, frame, rule);
      std::vector<double> errs;
      for (double h : {1e-3, 5e-4, 2.5e-4})
        errs.push_back(std::fabs(identity_fd_raw(idy, *tau, frame, rule, h) - rhs));
      const double floor = 1e-11 * std::max(1.0, std::fabs(rhs));
      if (oracles::below_noise_floor(errs, floor)) continue;  // exact in h
      CHECK(oracles::richardson_slope(errs) >= 1.9);
    }
  }
}

} // TEST_SUITE
