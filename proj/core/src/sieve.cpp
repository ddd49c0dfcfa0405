#include "wg/sieve.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>

namespace wg {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kMaxHi = u64(1) << 63;

// Compares b^e against x without overflowing: -1/0/+1.
int cmp_pow(u64 b, unsigned e, u64 x) {
  u128 acc = 1;
  for (unsigned i = 0; i < e; ++i) {
    acc *= b;
    if (acc > x) return 1;
  }
  return acc == x ? 0 : -1;
}

u64 mulmod(u64 a, u64 b, u64 m) { return u64((u128(a) * b) % m); }

u64 powmod(u64 b, u64 e, u64 m) {
  u64 r = 1;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

// Odd primes up to limit, for use as sieving base.
std::vector<u64> simple_odd_primes(u64 limit) {
  std::vector<u64> out;
  if (limit < 3) return out;
  std::vector<bool> comp((limit - 1) / 2, false);  // index i -> 2i+3
  for (u64 i = 0; 2 * i + 3 <= limit / (2 * i + 3); ++i) {
    if (comp[i]) continue;
    u64 p = 2 * i + 3;
    for (u64 j = (p * p - 3) / 2; j < comp.size(); j += p) comp[j] = true;
  }
  for (u64 i = 0; i < comp.size(); ++i)
    if (!comp[i]) out.push_back(2 * i + 3);
  return out;
}

}  // namespace

std::uint64_t iroot(std::uint64_t x, unsigned r) {
  if (r == 0) throw std::domain_error("iroot: r must be >= 1");
  if (r == 1 || x <= 1) return x;
  if (r >= 64) return 1;
  u64 t = static_cast<u64>(std::pow(static_cast<double>(x), 1.0 / r));
  // pow is only an estimate; walk to the exact floor.
  while (t > 0 && cmp_pow(t, r, x) > 0) --t;
  while (cmp_pow(t + 1, r, x) <= 0) ++t;
  return t;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  u128 acc = 1;
  for (unsigned i = 0; i < exp; ++i) {
    acc *= base;
    if (acc > ~u64(0)) throw std::overflow_error("ipow: result exceeds 64 bits");
  }
  return u64(acc);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is deterministic for all 64-bit integers.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 v = powmod(a, d, n);
    if (v == 1 || v == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      v = mulmod(v, v, n);
      if (v == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

void for_each_prime(std::uint64_t lo, std::uint64_t hi,
                    const std::function<void(std::uint64_t)>& fn) {
  if (hi > kMaxHi) throw std::overflow_error("for_each_prime: hi exceeds 2^63");
  if (lo < 2) lo = 2;
  if (lo >= hi) return;
  if (lo <= 2) fn(2);

  const u64 root = iroot(hi - 1, 2);
  const std::vector<u64> base = simple_odd_primes(root);

  // Odd-only bitmap over segments of kSegSpan integers.
  constexpr u64 kSegSpan = u64(1) << 21;
  std::vector<std::uint8_t> comp(kSegSpan / 2);

  u64 first = std::max<u64>(lo, 3) | 1;
  for (u64 seg_lo = first; seg_lo < hi; seg_lo += kSegSpan) {
    const u64 seg_hi = std::min(hi, seg_lo + kSegSpan);  // [seg_lo, seg_hi)
    const u64 n_odds = (seg_hi - seg_lo + 1) / 2;
    std::memset(comp.data(), 0, n_odds);
    for (u64 p : base) {
      u64 start = std::max(p * p, ((seg_lo + p - 1) / p) * p);
      if ((start & 1) == 0) start += p;
      if (start >= seg_hi) continue;
      for (u64 m = (start - seg_lo) / 2; m < n_odds; m += p) comp[m] = 1;
    }
    for (u64 i = 0; i < n_odds; ++i) {
      if (!comp[i]) {
        u64 p = seg_lo + 2 * i;
        if (p > 1) fn(p);
      }
    }
  }
}

std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) {
  std::vector<u64> out;
  for_each_prime(lo, hi, [&](u64 p) { out.push_back(p); });
  return out;
}

std::uint64_t count_primes(std::uint64_t lo, std::uint64_t hi) {
  u64 n = 0;
  for_each_prime(lo, hi, [&](u64) { ++n; });
  return n;
}

}  // namespace wg
