#pragma once

#include <cstdint>
#include <vector>

#include "wg/power_pair.hpp"

namespace wg {

enum class Weight : std::uint8_t { LogP, Lambda };

// Chebyshev psi(x) = sum of Lambda(m) for m <= x, by exact prime-power
// enumeration.
double psi(std::uint64_t x);

// psi at several points with one sieve pass; xs must be ascending.
std::vector<double> psi_many(const std::vector<std::uint64_t>& xs);

// R_{k,ell}(N) = sum of log p over solutions of p^k + n^ell = N with p prime
// and n >= 1. Zero when there are none.
double representation_sum(const PowerPair& p, std::uint64_t n_value);

// Window sum over X < m^k + n^ell <= X+H, weighted by log p (m = p prime)
// or by Lambda(m) (m any prime power). Exact enumeration; one batched
// segmented-sieve pass over the union of the per-n prime intervals.
// Workers own disjoint sieve ranges and partial sums reduce in a fixed
// order, so the result is deterministic for a fixed thread count.
double window_sum(const PowerPair& p, std::uint64_t x, std::uint64_t h,
                  Weight w, unsigned threads = 1);

// Main-term constant Gamma(1/k) Gamma(1/ell) / (k ell Gamma(1/k + 1/ell)).
double main_term_constant(const PowerPair& p);

// C(k, ell) * H * X^(1/k + 1/ell - 1).
double main_term(const PowerPair& p, double x, double h);

struct MainTermModel {
  int k = 1;
  int ell = 2;
  double constant = 1.0;  // C(k, ell) > 0
  double exponent = 0.5;  // 1/k + 1/ell - 1
};
MainTermModel main_term_model(const PowerPair& p);

// S(Q) = sum over n^ell <= X of (Q - n^ell)^(1/k); finite exact sum.
double s_direct(const PowerPair& p, double q, double x);

// Number of lattice solutions X < m^k + n^ell <= X+H with m, n >= 1.
std::uint64_t lattice_count(const PowerPair& p, std::uint64_t x,
                            std::uint64_t h, unsigned threads = 1);

// Truncated singular series: product over odd primes 2 < q <= p_limit of
// (1 - (N/q)/(q-1)) with the Legendre symbol (N/q); factor 1 when q | N.
double singular_series(std::uint64_t n_value, std::uint64_t p_limit);

struct ExperimentRecord {
  int k = 1;
  int ell = 2;
  std::uint64_t x = 0;
  std::uint64_t h = 0;
  double computed_sum = 0;
  double predicted = 0;
  double ratio = 0;
  double seconds = 0;
};

ExperimentRecord run_sieve_experiment(const PowerPair& p, std::uint64_t x,
                                      std::uint64_t h, Weight w,
                                      unsigned threads = 1);

}  // namespace wg
