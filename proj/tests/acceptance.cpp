// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Zero table path: argv[1], else WG_ZEROS_PATH, else the packaged data file.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "wg/arith.hpp"
#include "wg/density.hpp"
#include "wg/exact.hpp"
#include "wg/explicit_formula.hpp"
#include "wg/exponents.hpp"
#include "wg/oscillatory.hpp"
#include "wg/zeros.hpp"

using namespace wg;

namespace {

int g_failures = 0;

void report(int id, bool pass, const std::string& what, const std::string& detail) {
  std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << id << ": " << what
            << " (" << detail << ")\n";
  if (!pass) ++g_failures;
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

bool trial_division(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t powu(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// Brute-force window oracle with trial-division primality.
double window_oracle(int k, int ell, std::uint64_t x, std::uint64_t h) {
  long double acc = 0.0L;
  for (std::uint64_t n = 1; powu(n, ell) < x + h; ++n) {
    std::uint64_t ne = powu(n, ell);
    std::uint64_t hi = x + h - ne;
    for (std::uint64_t m = 2; powu(m, k) <= hi; ++m) {
      if (powu(m, k) + ne <= x) continue;
      if (trial_division(m)) acc += std::log((long double)m);
    }
  }
  return (double)acc;
}

const char* kTable1[] = {
    "A A A A A A A A A A",         "A A LZ LZ LZ LZ LZ LZ LZ LZ",
    "A A LZ LZ LZ LZ LZ LZ LZ LZ", "B A A LZ LZ LZ LZ LZ LZ LZ",
    "B A A LZ LZ LZ LZ LZ LZ LZ",  "B A A LZ LZ LZ LZ LZ LZ LZ",
    "B A A A LZ LZ LZ LZ LZ LZ",   "B A A A LZ LZ LZ LZ LZ LZ",
    "B B A A LZ LZ LZ LZ LZ LZ",   "B B B A A LZ LZ LZ LZ LZ",
    "B B B A A LZ LZ LZ LZ LZ",    "B B B B A A LZ LZ LZ LZ",
    "B B B B A A LZ LZ LZ LZ",     "B B B B B A A LZ LZ LZ",
    "B B B B B A A LZ LZ LZ",      "B B B B B A A LZ LZ LZ",
    "B B B B B B A A LZ LZ",       "B B B B B B A A LZ LZ",
    "B B B B B B B A A LZ",
};

void criterion_1() {
  Timer t;
  auto rep = exponent_report(PowerPair(1, 2));
  double elapsed = t.elapsed();
  double want = (32.0 - 4.0 * std::sqrt(15.0)) / 49.0;
  bool pass = std::abs(rep.big_theta - want) <= 1e-12 &&
              std::abs(rep.big_theta - 0.336899) < 1e-6 && elapsed < 1e-3;
  report(1, pass, "Theta(1,2) = (32-4*sqrt(15))/49 = 0.336899...",
         "value=" + fmt(rep.big_theta) + " seconds=" + fmt(elapsed));
}

void criterion_2() {
  Timer t;
  auto table = table1();
  int bad = 0;
  for (int ell = 2; ell <= 20; ++ell) {
    std::string row = kTable1[ell - 2];
    std::size_t pos = 0;
    for (int k = 1; k <= 10; ++k) {
      std::size_t sp = row.find(' ', pos);
      std::string want =
          sp == std::string::npos ? row.substr(pos) : row.substr(pos, sp - pos);
      pos = sp == std::string::npos ? row.size() : sp + 1;
      if (want != to_string(table[ell - 2][k - 1])) ++bad;
    }
  }
  double elapsed = t.elapsed();
  report(2, bad == 0 && elapsed < 1.0, "table1 reproduces all 190 reference cells",
         "mismatches=" + std::to_string(bad) + " seconds=" + fmt(elapsed));
}

void criterion_3() {
  double s15 = std::sqrt(15.0), s2 = std::sqrt(2.0);
  bool pass = std::abs(theta_a(PowerPair(1, 2)) - (17 + 4 * s15) / 49) <= 1e-12 &&
              std::abs(theta_a(PowerPair(1, 3)) - (44 + 24 * s2) / 147) <= 1e-12 &&
              std::abs(theta_a(PowerPair(1, 4)) - 5.0 / 11.0) <= 1e-12;
  // 1 - theta_A(1,2) equals Theta(1,2) exactly in the surd representation
  auto big =
      ExactValue::rational(32, 49) + ExactValue::sqrt_rational(15).scaled(-4, 49);
  pass = pass && (ExactValue::rational(1) - theta_a_exact(PowerPair(1, 2)) == big) &&
         (big_theta_exact(PowerPair(1, 2)) == big);
  report(3, pass, "theta_A closed forms at (1,2),(1,3),(1,4); exact surd identity",
         "surd=" + big_theta_exact(PowerPair(1, 2)).str());
}

void criterion_4() {
  Timer t;
  double worst = 0.0;
  for (int k = 1; k <= 10; ++k)
    for (int ell = 2; ell <= 20; ++ell) {
      worst =
          std::max(worst, std::abs(solve_lambda1(ell).lambda_star - lambda1(ell)));
      worst = std::max(worst,
                       std::abs(solve_lambda2(k, ell).lambda_star - lambda2(k, ell)));
    }
  std::mt19937 rng(20240517);
  std::uniform_real_distribution<double> dk(1.0, 10.0), de(2.0, 20.0);
  for (int i = 0; i < 50; ++i) {
    double k = dk(rng), ell = de(rng);
    worst = std::max(worst, std::abs(solve_lambda1(ell).lambda_star - lambda1(ell)));
    worst = std::max(worst,
                     std::abs(solve_lambda2(k, ell).lambda_star - lambda2(k, ell)));
  }
  double elapsed = t.elapsed();
  report(4, worst <= 1e-10 && elapsed < 1.0,
         "bisection matches closed forms over the grid plus 50 random pairs",
         "worst=" + fmt(worst) + " seconds=" + fmt(elapsed));
}

void criterion_5() {
  Timer t;
  double worst_phi = 0.0, worst_grid = 0.0;
  for (int i = 0; i <= 500; ++i) {
    double lam = i / 500.0;
    double hm = h_max(lam, 0.5, 0.75);
    worst_phi = std::max(worst_phi, std::abs(hm - phi(lam)));
    double grid = -1e300;
    for (int j = 0; j <= 10000; ++j) {
      double a = 0.5 + 0.25 * j / 10000.0;
      grid = std::max(grid, h_density(lam, a));
    }
    worst_grid = std::max(worst_grid, std::abs(hm - grid));
  }
  double elapsed = t.elapsed();
  report(5, worst_phi <= 1e-8 && worst_grid <= 1e-8 && elapsed < 5.0,
         "h_max equals phi on [0,1] with the 1e4-point grid oracle",
         "|h-phi|=" + fmt(worst_phi) + " |h-grid|=" + fmt(worst_grid) +
             " seconds=" + fmt(elapsed));
}

void criterion_6() {
  Timer t;
  std::uint64_t x = 10000000;
  auto h = static_cast<std::uint64_t>(std::ceil(std::pow(double(x), 0.55)));
  double sum = window_sum(PowerPair(1, 2), x, h, Weight::LogP, 1);
  double mt = main_term(PowerPair(1, 2), double(x), double(h));
  double ratio = sum / mt;
  double elapsed = t.elapsed();
  report(6, ratio >= 0.95 && ratio <= 1.05 && elapsed < 60.0,
         "sieve experiment (1,2), X=1e7, H=ceil(X^0.55): ratio in [0.95, 1.05]",
         "ratio=" + fmt(ratio) + " seconds=" + fmt(elapsed));
}

void criterion_7() {
  Timer t;
  double sum = window_sum(PowerPair(2, 2), 100000000, 1000000, Weight::LogP, 1);
  double predicted = std::acos(-1.0) / 4.0 * 1000000.0;
  double ratio = sum / predicted;
  double elapsed = t.elapsed();
  report(7, ratio >= 0.93 && ratio <= 1.07 && elapsed < 120.0,
         "sieve experiment (2,2), X=1e8, H=1e6: ratio to (pi/4)H in [0.93, 1.07]",
         "ratio=" + fmt(ratio) + " seconds=" + fmt(elapsed));
}

void criterion_8() {
  std::mt19937_64 rng(424242);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    int k = 1 + int(rng() % 3);
    int ell = 2 + int(rng() % 3);
    std::uint64_t x = 20000 + rng() % 80000;  // X <= 1e5
    std::uint64_t h = 50 + rng() % 2000;
    double got = window_sum(PowerPair(k, ell), x, h, Weight::LogP, 1);
    double want = window_oracle(k, ell, x, h);
    double rel = std::abs(got - want) / std::max(1.0, std::abs(want));
    worst = std::max(worst, rel);
  }
  report(8, worst <= 1e-9, "window_sum equals the brute-force oracle on 20 windows",
         "worst_rel=" + fmt(worst));
}

void criterion_9() {
  double worst = 0.0;
  int cases = 0;
  for (auto [k, ell] : std::vector<std::pair<int, int>>{
           {1, 2}, {2, 2}, {1, 3}, {2, 3}, {3, 2}, {1, 5}}) {
    PowerPair p(k, ell);
    for (double x : {5.0e4, 3.0e5, 2.0e6, 1.0e7, 5.0e7}) {
      double h = std::pow(x, 0.6);
      double diff = s_direct(p, x + h, x) - s_direct(p, x, x);
      double err = std::abs(diff - main_term(p, x, h));
      double shape = std::pow(h, 1.0 + 1.0 / k) * std::pow(x, 1.0 / ell - 1.0) +
                     std::pow(h, 1.0 / k);
      worst = std::max(worst, err / shape);
      ++cases;
    }
  }
  report(9, worst <= 10.0 && cases == 30,
         "S-difference matches the main term within 10x the error shape (30 cases)",
         "worst_fitted=" + fmt(worst));
}

void criterion_10(const std::string& zeros_path) {
  Timer t;
  auto table = load_zeros(zeros_path);
  bool enough = table.count_upto(1000.0) >= 649;
  std::vector<std::uint64_t> xs;
  for (int i = 0; i < 50; ++i) xs.push_back(100000 + i * 2000);  // [1e5, 2e5]
  auto direct = psi_many(xs);
  double worst = 0.0;
  const double t_height = 1000.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double x = double(xs[i]);
    auto r = psi_explicit(x, t_height, table, 1);
    double lx = std::log(x);
    double bound = 5.0 * x / t_height * lx * lx;
    worst = std::max(worst, std::abs(r.value - direct[i]) / bound);
  }
  double elapsed = t.elapsed();
  report(10, enough && worst <= 1.0 && elapsed < 30.0,
         "explicit formula with 649 zeros tracks psi within 5 x T^-1 log^2 x",
         "zeros_below_1000=" + std::to_string(table.count_upto(1000.0)) +
             " worst_ratio_to_bound=" + fmt(worst) + " seconds=" + fmt(elapsed));
}

void criterion_11() {
  Timer t;
  auto grid = builtin_audit_grid();
  auto rows = run_osc_audit(grid, 1);
  double worst = 0.0;
  for (const auto& r : rows) worst = std::max(worst, r.check.fitted_ratio);
  // n = 0 closed-form cross-check at quadrature tolerance
  double worst_closed = 0.0;
  for (const auto& c : grid) {
    if (c.n != 0) continue;
    std::complex<double> s(c.alpha, c.gamma / c.pair.k);
    auto want = (std::exp(s * std::log(c.v)) - std::exp(s * std::log(c.u))) / s;
    auto got = eval_osc(c, 1e-9);
    worst_closed = std::max(worst_closed,
                            std::abs(got - want) / (1e-9 * (1.0 + std::abs(want))));
  }
  double elapsed = t.elapsed();
  report(11,
         grid.size() >= 200 && worst <= 10.0 && worst_closed <= 10.0 && elapsed < 120.0,
         "oscillatory audit: all fitted ratios <= 10; n=0 matches closed form",
         "cases=" + std::to_string(grid.size()) + " max_ratio=" + fmt(worst) +
             " closed_form_x_tol=" + fmt(worst_closed) + " seconds=" + fmt(elapsed));
}

void criterion_12() {
  bool ok = true;
  std::string why;

  // continuity of phi and the lambdas at their breakpoints
  bool cont = std::abs(phi(25.0 / 48.0) - 17.0 / 16.0) < 1e-12 &&
              std::abs(phi(0.75) - 1.25) < 1e-12 &&
              std::abs(lambda1(3.0 - 1e-12) - lambda1(3.0 + 1e-12)) < 1e-11 &&
              std::abs(lambda1(25.0 / 3.0 - 1e-12) - lambda1(25.0 / 3.0 + 1e-12)) <
                  1e-11;
  if (!cont) why += "continuity ";
  ok = ok && cont;

  // strict monotonicity in ell on a dense grid
  bool mono = true;
  for (double ell = 2.0; ell < 24.0; ell += 0.01) {
    if (!(lambda1(ell + 0.01) < lambda1(ell))) mono = false;
    if (!(lambda2(3.0, ell + 0.01) < lambda2(3.0, ell))) mono = false;
  }
  if (!mono) why += "monotonicity ";
  ok = ok && mono;

  // comparison characterizations, exact, full integer grid
  bool comp = true;
  for (int ell = 2; ell <= 20; ++ell)
    for (int k = 1; k <= 10; ++k) {
      PowerPair p(k, ell);
      bool ab = theta_b_exact(p) < theta_a_exact(p);
      bool ab_region;
      if (ell <= 9) {
        ab_region = 24 * k > 5 * ell;
      } else {
        long long c = 24LL * k - 5 * ell;
        ab_region = c > 0 && c * c > (long long)ell * (25 * ell - 240);
      }
      if (ab != ab_region) comp = false;

      bool nc = theta_lz_exact(p) < theta_exact(p);
      bool nc_region =
          ell == 2 || ExactValue::rational(k) < lambda1_exact(ell).scaled(ell);
      if (nc != nc_region) comp = false;
    }
  for (int ell = 10; ell <= 20; ++ell)
    for (int k = 2; k <= 3 * ell; ++k) {
      bool lhs = 5LL * ell * (k - 1) >= 12LL * k * k;
      long long c = 24LL * k - 5 * ell;
      bool rhs = c * c <= (long long)ell * (25LL * ell - 240);
      if (lhs != rhs) comp = false;
    }
  if (!comp) why += "comparisons ";
  ok = ok && comp;

  report(12, ok, "property suites: continuity, monotonicity, comparison regions",
         why.empty() ? "all hold on [1,10]x[2,20]" : why);
}

}  // namespace

int main(int argc, char** argv) {
  std::string zeros_path;
  if (argc > 1) {
    zeros_path = argv[1];
  } else if (const char* env = std::getenv("WG_ZEROS_PATH")) {
    zeros_path = env;
  } else {
    zeros_path = std::string(WGSHORT_DATA_DIR) + "/zeta_zeros_1000.txt";
  }

  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10(zeros_path);
  criterion_11();
  criterion_12();

  if (g_failures) {
    std::cout << g_failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all 12 criteria passed\n";
  return 0;
}
