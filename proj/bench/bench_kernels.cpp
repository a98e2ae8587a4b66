// Serial reference against the OpenMP path for each data-parallel kernel.
// Argument 0 selects Exec::kSerial, 1 selects Exec::kParallel.

#include <benchmark/benchmark.h>

#include <vector>

#include "critline/criteria.hpp"
#include "critline/zero_finder.hpp"
#include "critline/zeta.hpp"

using namespace critline;

namespace {

Exec exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Exec::kSerial : Exec::kParallel;
}

void BM_DirectSum(benchmark::State& state) {
  PrecisionParams p;
  p.N = 1000000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(zeta_direct(Complex(1.5, 30.0), p, exec_of(state)));
  }
}

void BM_LevelSeries(benchmark::State& state) {
  PrecisionParams p;
  p.N = 1000000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(level_series(Complex(0.5, 14.0), 1, p, exec_of(state)));
  }
}

void BM_GridScan(benchmark::State& state) {
  PrecisionParams p;
  p.K = 1;
  p.N = 1000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        scan_rectangle(0.1, 0.9, 12.0, 16.0, 0.02, 0.02, p, false, exec_of(state)));
  }
}

void BM_LagariasMargins(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(lagarias_check(1000000, exec_of(state)));
  }
}

void BM_Bareiss(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(redheffer_det(1000, exec_of(state)));
  }
}

void BM_Gram(benchmark::State& state) {
  const std::vector<double> alphas = reciprocal_alphas(16);
  for (auto _ : state) {
    benchmark::DoNotOptimize(nyman_beurling_solve(alphas, 1000, exec_of(state)));
  }
}

}  // namespace

BENCHMARK(BM_DirectSum)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LevelSeries)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridScan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LagariasMargins)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Bareiss)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Gram)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
