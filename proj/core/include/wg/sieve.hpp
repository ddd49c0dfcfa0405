#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace wg {

// floor(x^(1/r)), exact for all 64-bit x and r >= 1.
std::uint64_t iroot(std::uint64_t x, unsigned r);

// base^exp; throws std::overflow_error if it does not fit in 64 bits.
std::uint64_t ipow(std::uint64_t base, unsigned exp);

// Deterministic Miller--Rabin, valid for all 64-bit inputs.
bool is_prime(std::uint64_t n);

// Calls fn(p) for every prime p in [lo, hi), in increasing order.
// Segmented odd-wheel sieve; hi must not exceed 2^63.
void for_each_prime(std::uint64_t lo, std::uint64_t hi,
                    const std::function<void(std::uint64_t)>& fn);

std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi);
std::uint64_t count_primes(std::uint64_t lo, std::uint64_t hi);

}  // namespace wg
