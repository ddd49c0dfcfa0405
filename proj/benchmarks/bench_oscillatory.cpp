#include <benchmark/benchmark.h>

#include "wg/oscillatory.hpp"

namespace {

void BM_EvalOscGamma(benchmark::State& state) {
  wg::OscIntegralCase c{wg::PowerPair(1, 2), 0.5,
                        static_cast<double>(state.range(0)), 3, 1e4, 10, 1e3};
  for (auto _ : state) {
    benchmark::DoNotOptimize(wg::eval_osc(c, 1e-9));
  }
}
BENCHMARK(BM_EvalOscGamma)->Arg(10)->Arg(100)->Arg(1000)->Arg(10000);

void BM_EvalOscLargeN(benchmark::State& state) {
  wg::OscIntegralCase c{wg::PowerPair(1, 2), 0.5, 1.0, state.range(0), 100, 1, 99};
  for (auto _ : state) {
    benchmark::DoNotOptimize(wg::eval_osc(c, 1e-9));
  }
}
BENCHMARK(BM_EvalOscLargeN)->Arg(10)->Arg(100)->Arg(1000);

void BM_ExpIntBound(benchmark::State& state) {
  wg::OscIntegralCase c{wg::PowerPair(2, 3), 0.0, 300.0, -7, 1e4, 10, 1e3};
  for (auto _ : state) {
    benchmark::DoNotOptimize(wg::exp_int_bound(c));
  }
}
BENCHMARK(BM_ExpIntBound);

}  // namespace

BENCHMARK_MAIN();
