#include <benchmark/benchmark.h>

#include <cmath>

#include <Eigen/Dense>

#include <gmono/monogamy.hpp>
#include <gmono/state.hpp>
#include <gmono/symplectic.hpp>
#include <gmono/two_mode.hpp>

namespace {

Eigen::MatrixXd entangled_pair_cm() {
  // mixed entangled reduction of a three-mode pure state
  const gmono::GaussianState st = gmono::random_pure_state(3, 1.2, 42);
  return gmono::reduce(st, {0, 1}).cm;
}

void BM_random_pure_state(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(gmono::random_pure_state(n, 1.2, seed++));
}
BENCHMARK(BM_random_pure_state)->Arg(3)->Arg(6);

void BM_symplectic_spectrum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const gmono::GaussianState st = gmono::random_pure_state(n, 1.2, 7);
  const Eigen::MatrixXd cm = gmono::reduce(st, {0, 1}).cm;
  for (auto _ : state)
    benchmark::DoNotOptimize(gmono::symplectic_spectrum(cm));
}
BENCHMARK(BM_symplectic_spectrum)->Arg(3)->Arg(6);

void BM_standard_form(benchmark::State& state) {
  const Eigen::MatrixXd cm = entangled_pair_cm();
  for (auto _ : state) benchmark::DoNotOptimize(gmono::standard_form(cm));
}
BENCHMARK(BM_standard_form);

void BM_min_m(benchmark::State& state) {
  const gmono::StandardForm sf = gmono::standard_form(entangled_pair_cm());
  for (auto _ : state) benchmark::DoNotOptimize(gmono::min_m(sf));
}
BENCHMARK(BM_min_m);

void BM_mixed_tangle(benchmark::State& state) {
  const gmono::StandardForm sf = gmono::standard_form(entangled_pair_cm());
  for (auto _ : state) benchmark::DoNotOptimize(gmono::mixed_tangle(sf));
}
BENCHMARK(BM_mixed_tangle);

void BM_bound_report(benchmark::State& state) {
  const gmono::StandardForm sf = gmono::standard_form(entangled_pair_cm());
  for (auto _ : state) benchmark::DoNotOptimize(gmono::bound_report(sf));
}
BENCHMARK(BM_bound_report);

void BM_monogamy_residual(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const gmono::GaussianState st = gmono::random_pure_state(n, 1.2, 99);
  for (auto _ : state)
    benchmark::DoNotOptimize(gmono::monogamy_residual(st, 0));
}
BENCHMARK(BM_monogamy_residual)->Arg(3)->Arg(4);

void BM_sweep_small(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(gmono::sweep(3, 50, 1.0, 2024));
}
BENCHMARK(BM_sweep_small);

}  // namespace

BENCHMARK_MAIN();
