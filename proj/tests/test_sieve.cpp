#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "wg/sieve.hpp"

using namespace wg;
using u64 = std::uint64_t;

namespace {

// Independent simple sieve oracle.
std::vector<bool> simple_sieve(u64 n) {
  std::vector<bool> is(n + 1, true);
  is[0] = false;
  if (n >= 1) is[1] = false;
  for (u64 i = 2; i * i <= n; ++i)
    if (is[i])
      for (u64 j = i * i; j <= n; j += i) is[j] = false;
  return is;
}

bool trial_division(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("iroot is the exact floor") {
  CHECK(iroot(0, 2) == 0);
  CHECK(iroot(1, 7) == 1);
  CHECK(iroot(63, 2) == 7);
  CHECK(iroot(64, 2) == 8);
  CHECK(iroot(26, 3) == 2);
  CHECK(iroot(27, 3) == 3);
  CHECK(iroot(1000000, 1) == 1000000);
  CHECK(iroot(~u64(0), 2) == 4294967295ull);
  CHECK(iroot(~u64(0), 64) == 1);
  CHECK_THROWS_AS(iroot(5, 0), std::domain_error);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 5000; ++i) {
    unsigned r = 2 + rng() % 9;
    u64 x = rng() >> (rng() % 40);
    u64 t = iroot(x, r);
    // t^r <= x < (t+1)^r
    unsigned __int128 lo = 1, hi = 1;
    for (unsigned j = 0; j < r; ++j) {
      lo *= t;
      hi *= t + 1;
    }
    CHECK(lo <= x);
    CHECK(hi > x);
  }
}

TEST_CASE("ipow overflow") {
  CHECK(ipow(2, 10) == 1024);
  CHECK(ipow(10, 19) == 10000000000000000000ull);
  CHECK_THROWS_AS(ipow(10, 20), std::overflow_error);
}

TEST_CASE("deterministic Miller-Rabin vs trial division") {
  for (u64 n = 0; n < 2000; ++n) CHECK(is_prime(n) == trial_division(n));
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    u64 n = rng() % 100000000;
    CHECK(is_prime(n) == trial_division(n));
  }
  CHECK(is_prime(2305843009213693951ull));  // 2^61 - 1
  CHECK_FALSE(is_prime(2305843009213693953ull));
}

TEST_CASE("primes_in matches the simple sieve") {
  auto oracle = simple_sieve(30000);
  auto got = primes_in(2, 30001);
  std::vector<u64> want;
  for (u64 i = 2; i <= 30000; ++i)
    if (oracle[i]) want.push_back(i);
  CHECK(got == want);

  CHECK(primes_in(2, 10) == std::vector<u64>{2, 3, 5, 7});
  CHECK(primes_in(10, 12) == std::vector<u64>{11});
  CHECK(primes_in(5, 5).empty());
}

TEST_CASE("pi(10^6) = 78498") { CHECK(count_primes(1, 1000001) == 78498); }

TEST_CASE("segment boundaries near 10^9 match trial division") {
  auto got = primes_in(1000000000ull, 1000000100ull);
  std::vector<u64> want;
  for (u64 n = 1000000000ull; n < 1000000100ull; ++n)
    if (trial_division(n)) want.push_back(n);
  CHECK(got == want);
}

TEST_CASE("for_each_prime rejects out-of-range hi") {
  CHECK_THROWS_AS(count_primes(2, (u64(1) << 63) + 1), std::overflow_error);
}
