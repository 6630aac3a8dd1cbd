// Serial reference against the OpenMP variants.

#include <benchmark/benchmark.h>

#include <cmath>

#include "gapless/pencil.hpp"
#include "gapless/sweep.hpp"

using namespace gapless;

namespace {

const Pencil& pencil() {
  static const Pencil p = Pencil::assemble({pi / 3, 1e4, WeightMode::Secant2}, 1 << 16);
  return p;
}

void BM_BisectSerial(benchmark::State& state) {
  const auto [lo, hi] = pencil_bounds(pencil(), 1e4);
  for (auto _ : state) benchmark::DoNotOptimize(bisect_eigenvalue_serial(pencil(), 1, lo, hi, 1e-14));
}
BENCHMARK(BM_BisectSerial)->Unit(benchmark::kMillisecond);

void BM_MultisectParallel(benchmark::State& state) {
  const auto [lo, hi] = pencil_bounds(pencil(), 1e4);
  for (auto _ : state)
    benchmark::DoNotOptimize(multisect_eigenvalue_parallel(pencil(), 1, lo, hi, 1e-14));
}
BENCHMARK(BM_MultisectParallel)->Unit(benchmark::kMillisecond);

std::vector<Real> samples() {
  const std::vector<double> g = uniform_grid(0, 1, 1 << 20);
  std::vector<Real> f(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) f[i] = std::exp(-g[i] * g[i]);
  return f;
}

void BM_SimpsonSerial(benchmark::State& state) {
  const auto f = samples();
  for (auto _ : state) benchmark::DoNotOptimize(simpson_serial(f, 1.0 / (1 << 20)));
}
BENCHMARK(BM_SimpsonSerial);

void BM_SimpsonParallel(benchmark::State& state) {
  const auto f = samples();
  for (auto _ : state) benchmark::DoNotOptimize(simpson_parallel(f, 1.0 / (1 << 20)));
}
BENCHMARK(BM_SimpsonParallel);

SweepConfig small_sweep() {
  SweepConfig c;
  c.mu_values = {100, 300, 1000, 3000};
  return c;
}

void BM_SweepSerial(benchmark::State& state) {
  const SweepConfig c = small_sweep();
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep_serial(c));
}
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond)->Iterations(2);

void BM_SweepParallel(benchmark::State& state) {
  const SweepConfig c = small_sweep();
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep_parallel(c));
}
BENCHMARK(BM_SweepParallel)->Unit(benchmark::kMillisecond)->Iterations(2);

}  // namespace

BENCHMARK_MAIN();
