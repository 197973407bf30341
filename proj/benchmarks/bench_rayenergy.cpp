#include <benchmark/benchmark.h>

#include "segray/ray_energy.hpp"
#include "segray/sampling.hpp"

using namespace segray;

namespace {

TensorFieldPtr wave_tensor() {
  return make_conformal_tensor(make_plane_wave(Vec(1.3, 0.7), 1.0, 0.4));
}

void BM_energy_nodes(benchmark::State& state) {
  const auto tau = wave_tensor();
  QuadratureRule rule;
  rule.panels = 4;
  rule.nodes_per_panel = static_cast<int>(state.range(0));
  const Vec x(-0.6, 0.2), y(0.7, -0.4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(energy(*tau, x, y, rule));
  }
}
BENCHMARK(BM_energy_nodes)->DenseRange(4, 16, 4);

void BM_energy_graded(benchmark::State& state) {
  const auto tau = wave_tensor();
  QuadratureRule rule;
  rule.nodes_per_panel = 12;
  rule.graded_endpoints = true;
  rule.grade_levels = static_cast<int>(state.range(0));
  const Vec x(-0.6, 0.2), y(0.7, -0.4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(energy(*tau, x, y, rule));
  }
}
BENCHMARK(BM_energy_graded)->Arg(16)->Arg(32)->Arg(48);

void BM_identity_pair(benchmark::State& state) {
  const auto tau = wave_tensor();
  QuadratureRule rule;
  rule.panels = 4;
  rule.nodes_per_panel = 12;
  const std::vector<std::pair<Vec, Vec>> pairs = {{Vec(-0.6, 0.2), Vec(0.7, -0.4)}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(identity_suite(*tau, pairs, rule, 2e-3));
  }
}
BENCHMARK(BM_identity_pair);

void BM_lemma21(benchmark::State& state) {
  const SegmentFrame frame = segment_frame(Vec(-0.6, 0.2), Vec(0.7, -0.4));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lemma21_check(frame, 1e-3));
  }
}
BENCHMARK(BM_lemma21);

} // namespace

BENCHMARK_MAIN();
