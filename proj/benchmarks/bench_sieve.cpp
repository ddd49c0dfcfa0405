#include <benchmark/benchmark.h>

#include <cmath>

#include "wg/arith.hpp"
#include "wg/sieve.hpp"

namespace {

void BM_CountPrimes(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(wg::count_primes(2, n));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_CountPrimes)->Range(1 << 16, 1 << 24);

void BM_WindowSum12(benchmark::State& state) {
  const auto x = static_cast<std::uint64_t>(state.range(0));
  const auto h = static_cast<std::uint64_t>(std::pow(double(x), 0.55));
  wg::PowerPair p(1, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wg::window_sum(p, x, h, wg::Weight::LogP));
  }
}
BENCHMARK(BM_WindowSum12)->Range(1 << 16, 1 << 24);

void BM_WindowSum22Threads(benchmark::State& state) {
  const auto threads = static_cast<unsigned>(state.range(0));
  wg::PowerPair p(2, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        wg::window_sum(p, 100000000, 1000000, wg::Weight::LogP, threads));
  }
}
BENCHMARK(BM_WindowSum22Threads)->Arg(1)->Arg(2)->Arg(4);

void BM_Psi(benchmark::State& state) {
  const auto x = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(wg::psi(x));
  }
}
BENCHMARK(BM_Psi)->Range(1 << 14, 1 << 22);

void BM_LatticeCount(benchmark::State& state) {
  wg::PowerPair p(1, 2);
  const auto x = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(wg::lattice_count(p, x, x / 100));
  }
}
BENCHMARK(BM_LatticeCount)->Range(1 << 16, 1 << 26);

}  // namespace

BENCHMARK_MAIN();
