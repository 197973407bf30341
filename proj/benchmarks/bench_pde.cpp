#include <benchmark/benchmark.h>

#include "segray/grid2d.hpp"
#include "segray/log_field.hpp"
#include "segray/spectral.hpp"

using namespace segray;

namespace {

std::shared_ptr<const ConvexDomain> disc() {
  static auto d = std::make_shared<ConvexDomain>(make_disc(1.0));
  return d;
}

void BM_build_operator(benchmark::State& state) {
  const double h = 1.0 / state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_operator(disc(), *make_zero_field(2), h));
  }
}
BENCHMARK(BM_build_operator)->Arg(25)->Arg(50)->Arg(100);

void BM_operator_apply(benchmark::State& state) {
  const double h = 1.0 / state.range(0);
  const Operator2D op = build_operator(disc(), *make_zero_field(2), h);
  Eigen::VectorXd v = Eigen::VectorXd::Random(op.matrix.rows()).cwiseAbs();
  for (auto _ : state) {
    benchmark::DoNotOptimize((op.matrix * v).eval());
  }
}
BENCHMARK(BM_operator_apply)->Arg(25)->Arg(50)->Arg(100);

void BM_eigen_smallest(benchmark::State& state) {
  const double h = 1.0 / state.range(0);
  const Operator2D op = build_operator(disc(), *make_zero_field(2), h);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eigen_smallest(op.matrix));
  }
}
BENCHMARK(BM_eigen_smallest)->Arg(25)->Arg(50);

void BM_heat_step(benchmark::State& state) {
  const double h = 1.0 / state.range(0);
  const Operator2D op = build_operator(disc(), *make_zero_field(2), h);
  Eigen::VectorXd u0(op.matrix.rows());
  for (int i = 0; i < u0.size(); ++i) {
    const Vec p = op.grid->point(i);
    u0[i] = 1.0 - 0.5 * dot(p, p);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(heat_solve(op.matrix, u0, 1e-3, 1e-2,
                                        Scheme::CrankNicolson, {}, 0.0));
  }
}
BENCHMARK(BM_heat_step)->Arg(25)->Arg(50);

} // namespace
