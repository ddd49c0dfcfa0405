#include <benchmark/benchmark.h>

#include "wg/density.hpp"
#include "wg/exponents.hpp"

namespace {

void BM_ExponentReport(benchmark::State& state) {
  wg::PowerPair p(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(wg::exponent_report(p));
  }
}
// (1,2) is surd-only; (2,10) hits the exact-arithmetic tie escalation
BENCHMARK(BM_ExponentReport)->Args({1, 2})->Args({2, 10})->Args({10, 20});

void BM_Table1(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(wg::table1());
  }
}
BENCHMARK(BM_Table1);

void BM_SolveLambda1(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(wg::solve_lambda1(7.5));
  }
}
BENCHMARK(BM_SolveLambda1);

void BM_HMax(benchmark::State& state) {
  double lam = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(wg::h_max(lam, 0.5, 0.75));
    lam += 1e-4;
    if (lam > 1.0) lam = 0.0;
  }
}
BENCHMARK(BM_HMax);

}  // namespace

BENCHMARK_MAIN();
