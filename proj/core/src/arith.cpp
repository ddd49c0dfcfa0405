#include "wg/arith.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "wg/kahan.hpp"
#include "wg/sieve.hpp"

namespace wg {

namespace {

using u64 = std::uint64_t;

constexpr u64 kTopLimit = u64(1) << 62;

void check_window(u64 x, u64 h) {
  if (h < 4 || h > x) throw std::domain_error("window: need 4 <= H <= X");
  if (x > kTopLimit - h) throw std::overflow_error("window: X + H exceeds 2^62");
}

// Number of n >= 1 with n^ell <= y.
u64 count_powers_upto(u64 y, int ell) { return iroot(y, ell); }

// Number of n with max(x - mk, 0) < n^ell <= top - mk, i.e. how many of the
// per-n prime intervals contain mk. Requires mk <= top - 1.
u64 interval_multiplicity(u64 mk, u64 x, u64 top, int ell) {
  u64 upper = count_powers_upto(top - mk, ell);
  u64 lower = x > mk ? count_powers_upto(x - mk, ell) : 0;
  return upper - lower;
}

struct Interval {
  u64 lo, hi;  // inclusive
};

// Union of the prime ranges (X - n^ell, X+H - n^ell] for k = 1, merged in
// ascending order so the sieve sweeps each subrange exactly once.
std::vector<Interval> merged_prime_intervals(u64 x, u64 top, int ell) {
  std::vector<Interval> iv;
  for (u64 n = iroot(top - 1, ell); n >= 1; --n) {
    u64 ne = ipow(n, static_cast<unsigned>(ell));
    if (ne + 2 > top) continue;
    u64 hi = top - ne;
    u64 lo = x > ne + 1 ? x - ne + 1 : 2;
    if (lo > hi) continue;
    if (!iv.empty() && lo <= iv.back().hi + 1) {
      iv.back().hi = std::max(iv.back().hi, hi);
    } else {
      iv.push_back({lo, hi});
    }
  }
  return iv;
}

std::vector<Interval> split_pieces(const std::vector<Interval>& iv, u64 max_span) {
  std::vector<Interval> out;
  for (const auto& s : iv) {
    if (s.lo > s.hi) continue;
    for (u64 a = s.lo;;) {
      u64 b = std::min(s.hi, a + (max_span - 1));
      out.push_back({a, b});
      if (b == s.hi) break;
      a = b + 1;
    }
  }
  return out;
}

// Weighted prime sweep over the pieces; contiguous blocks of pieces per
// worker and an index-ordered reduction keep the result deterministic for
// a fixed thread count.
double sweep_primes(const std::vector<Interval>& pieces, int k, int ell, u64 x,
                    u64 top, unsigned threads) {
  if (pieces.empty()) return 0.0;
  unsigned nw = std::max(1u, std::min<unsigned>(threads, pieces.size()));
  std::vector<KahanSum> parts(nw);

  auto run = [&](unsigned w, std::size_t i0, std::size_t i1) {
    KahanSum& ks = parts[w];
    for (std::size_t i = i0; i < i1; ++i) {
      for_each_prime(pieces[i].lo, pieces[i].hi + 1, [&](u64 p) {
        u64 mk = k == 1 ? p : ipow(p, static_cast<unsigned>(k));
        u64 cnt = interval_multiplicity(mk, x, top, ell);
        if (cnt) ks.add(std::log(static_cast<double>(p)) * static_cast<double>(cnt));
      });
    }
  };

  if (nw == 1) {
    run(0, 0, pieces.size());
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < nw; ++w) {
      std::size_t i0 = pieces.size() * w / nw;
      std::size_t i1 = pieces.size() * (w + 1) / nw;
      pool.emplace_back(run, w, i0, i1);
    }
    for (auto& t : pool) t.join();
  }

  KahanSum total;
  for (const auto& ks : parts) total.add(ks.value());
  return total.value();
}

double raw_main_term_constant(int k, int ell) {
  double a = 1.0 / k, b = 1.0 / ell;
  return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b)) /
         (static_cast<double>(k) * ell);
}

// Legendre symbol via the Jacobi algorithm; n odd positive.
int jacobi(u64 a, u64 n) {
  a %= n;
  int t = 1;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      u64 r = n & 7;
      if (r == 3 || r == 5) t = -t;
    }
    std::swap(a, n);
    if ((a & 3) == 3 && (n & 3) == 3) t = -t;
    a %= n;
  }
  return n == 1 ? t : 0;
}

}  // namespace

double psi(std::uint64_t x) {
  if (x < 2) return 0.0;
  KahanSum ks;
  for_each_prime(2, x + 1, [&](u64 p) { ks.add(std::log(static_cast<double>(p))); });
  for_each_prime(2, iroot(x, 2) + 1, [&](u64 p) {
    double lp = std::log(static_cast<double>(p));
    for (u64 m = p * p;;) {
      ks.add(lp);
      if (m > x / p) break;
      m *= p;
    }
  });
  return ks.value();
}

std::vector<double> psi_many(const std::vector<std::uint64_t>& xs) {
  if (xs.empty()) throw std::domain_error("psi_many: empty input");
  for (std::size_t i = 1; i < xs.size(); ++i)
    if (xs[i] < xs[i - 1]) throw std::domain_error("psi_many: points must ascend");

  std::vector<double> out(xs.size(), 0.0);
  const u64 top = xs.back();
  if (top < 2) return out;

  KahanSum ks;
  std::size_t i = 0;
  for_each_prime(2, top + 1, [&](u64 p) {
    while (i < xs.size() && xs[i] < p) out[i++] = ks.value();
    ks.add(std::log(static_cast<double>(p)));
  });
  while (i < xs.size()) out[i++] = ks.value();

  // Proper prime powers, merged in ascending order of p^nu.
  std::vector<std::pair<u64, double>> events;
  for_each_prime(2, iroot(top, 2) + 1, [&](u64 p) {
    double lp = std::log(static_cast<double>(p));
    for (u64 m = p * p;;) {
      events.emplace_back(m, lp);
      if (m > top / p) break;
      m *= p;
    }
  });
  std::sort(events.begin(), events.end());
  KahanSum extra;
  std::size_t j = 0;
  for (std::size_t t = 0; t < xs.size(); ++t) {
    while (j < events.size() && events[j].first <= xs[t]) extra.add(events[j++].second);
    out[t] += extra.value();
  }
  return out;
}

double representation_sum(const PowerPair& p, std::uint64_t n_value) {
  if (n_value < 2) throw std::domain_error("representation_sum: N must be >= 2");
  KahanSum ks;
  const u64 nmax = iroot(n_value - 1, p.ell);
  for (u64 n = 1; n <= nmax; ++n) {
    u64 m = n_value - ipow(n, static_cast<unsigned>(p.ell));
    if (m < 2) continue;
    u64 base = iroot(m, p.k);
    if (ipow(base, static_cast<unsigned>(p.k)) == m && is_prime(base))
      ks.add(std::log(static_cast<double>(base)));
  }
  return ks.value();
}

double window_sum(const PowerPair& p, std::uint64_t x, std::uint64_t h, Weight w,
                  unsigned threads) {
  check_window(x, h);
  const u64 top = x + h;
  const u64 mmax = iroot(top - 1, p.k);

  std::vector<Interval> ranges = p.k == 1 ? merged_prime_intervals(x, top, p.ell)
                                          : std::vector<Interval>{{2, mmax}};
  double total = sweep_primes(split_pieces(ranges, u64(1) << 22), p.k, p.ell, x,
                              top, threads);

  if (w == Weight::Lambda) {
    // Proper prime powers m = p^nu <= (X+H)^(1/k), nu >= 2.
    KahanSum extra;
    for_each_prime(2, iroot(mmax, 2) + 1, [&](u64 q) {
      double lq = std::log(static_cast<double>(q));
      for (u64 m = q * q;;) {
        u64 mk = ipow(m, static_cast<unsigned>(p.k));
        u64 cnt = interval_multiplicity(mk, x, top, p.ell);
        if (cnt) extra.add(lq * static_cast<double>(cnt));
        if (m > mmax / q) break;
        m *= q;
      }
    });
    total += extra.value();
  }
  return total;
}

double main_term_constant(const PowerPair& p) {
  static const bool anchored = [] {
    // The Beta-integral form is pinned by C(1,2) = 1 and C(2,2) = pi/4.
    bool ok = std::abs(raw_main_term_constant(1, 2) - 1.0) < 1e-12 &&
              std::abs(raw_main_term_constant(2, 2) - std::acos(-1.0) / 4.0) < 1e-12;
    if (!ok) throw std::logic_error("main_term_constant: anchor check failed");
    return true;
  }();
  (void)anchored;
  return raw_main_term_constant(p.k, p.ell);
}

double main_term(const PowerPair& p, double x, double h) {
  if (!(h >= 4.0) || !(h <= x)) throw std::domain_error("main_term: need 4 <= H <= X");
  double expo = 1.0 / p.k + 1.0 / p.ell - 1.0;
  return main_term_constant(p) * h * std::pow(x, expo);
}

MainTermModel main_term_model(const PowerPair& p) {
  MainTermModel m;
  m.k = p.k;
  m.ell = p.ell;
  m.constant = main_term_constant(p);
  m.exponent = 1.0 / p.k + 1.0 / p.ell - 1.0;
  return m;
}

double s_direct(const PowerPair& p, double q, double x) {
  if (!(x >= 0.0)) throw std::domain_error("s_direct: X must be >= 0");
  if (x < 1.0) return 0.0;
  if (x >= static_cast<double>(kTopLimit))
    throw std::overflow_error("s_direct: X too large");
  const u64 nmax = iroot(static_cast<u64>(x), p.ell);
  const u64 largest = ipow(nmax, static_cast<unsigned>(p.ell));
  if (q < static_cast<double>(largest))
    throw std::domain_error("s_direct: Q below the largest n^ell term");
  KahanSum ks;
  for (u64 n = 1; n <= nmax; ++n) {
    double base = q - static_cast<double>(ipow(n, static_cast<unsigned>(p.ell)));
    ks.add(p.k == 1 ? base : std::pow(base, 1.0 / p.k));
  }
  return ks.value();
}

std::uint64_t lattice_count(const PowerPair& p, std::uint64_t x, std::uint64_t h,
                            unsigned threads) {
  check_window(x, h);
  const u64 top = x + h;
  const u64 nmax = iroot(top - 1, p.ell);

  unsigned nw = std::max<u64>(1, std::min<u64>(threads, nmax));
  std::vector<u64> parts(nw, 0);
  auto run = [&](unsigned w, u64 n0, u64 n1) {
    u64 acc = 0;
    for (u64 n = n0; n < n1; ++n) {
      u64 ne = ipow(n, static_cast<unsigned>(p.ell));
      u64 upper = iroot(top - ne, p.k);
      u64 lower = x > ne ? iroot(x - ne, p.k) : 0;
      acc += upper - lower;
    }
    parts[w] = acc;
  };
  if (nw == 1) {
    run(0, 1, nmax + 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < nw; ++w)
      pool.emplace_back(run, w, 1 + nmax * w / nw, 1 + nmax * (w + 1) / nw);
    for (auto& t : pool) t.join();
  }
  u64 total = 0;
  for (u64 v : parts) total += v;
  return total;
}

double singular_series(std::uint64_t n_value, std::uint64_t p_limit) {
  if (n_value < 1) throw std::domain_error("singular_series: N must be >= 1");
  if (p_limit < 3) throw std::domain_error("singular_series: P must be >= 3");
  double prod = 1.0;
  for_each_prime(3, p_limit + 1, [&](u64 q) {
    int j = jacobi(n_value % q, q);
    if (j) prod *= 1.0 - static_cast<double>(j) / static_cast<double>(q - 1);
  });
  return prod;
}

ExperimentRecord run_sieve_experiment(const PowerPair& p, std::uint64_t x,
                                      std::uint64_t h, Weight w, unsigned threads) {
  ExperimentRecord r;
  r.k = p.k;
  r.ell = p.ell;
  r.x = x;
  r.h = h;
  auto t0 = std::chrono::steady_clock::now();
  r.computed_sum = window_sum(p, x, h, w, threads);
  auto t1 = std::chrono::steady_clock::now();
  r.seconds = std::chrono::duration<double>(t1 - t0).count();
  r.predicted = main_term(p, static_cast<double>(x), static_cast<double>(h));
  r.ratio = r.computed_sum / r.predicted;
  return r;
}

}  // namespace wg
