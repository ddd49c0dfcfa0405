#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "wg/oscillatory.hpp"

using namespace wg;
using cd = std::complex<double>;

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Long double composite Simpson oracle in u-space; slow but independent of
// the panelled Gauss--Kronrod path.
cd simpson_oracle(const OscIntegralCase& c, std::size_t intervals) {
  using cl = std::complex<long double>;
  cl s(c.alpha, c.gamma / c.pair.k);
  auto f = [&](long double u) -> cl {
    cl amp = std::exp((s - 1.0L) * std::log(u));
    long double ph = kTwoPi * (long double)c.n *
                     std::pow((long double)c.q - u, 1.0L / c.pair.ell);
    return amp * cl(std::cos(ph), std::sin(ph));
  };
  if (intervals % 2) ++intervals;
  long double a = c.u, b = c.v, h = (b - a) / intervals;
  cl acc = f(a) + f(b);
  for (std::size_t i = 1; i < intervals; ++i)
    acc += f(a + h * i) * (i % 2 ? 4.0L : 2.0L);
  acc *= h / 3.0L;
  return {double(acc.real()), double(acc.imag())};
}

}  // namespace

TEST_CASE("case validation") {
  PowerPair p(1, 2);
  CHECK_THROWS_AS(eval_osc({p, 1.5, 10, 0, 100, 1, 50}, 1e-8), std::domain_error);
  CHECK_THROWS_AS(eval_osc({p, 0.5, 0.5, 0, 100, 1, 50}, 1e-8), std::domain_error);
  CHECK_THROWS_AS(eval_osc({p, 0.5, 10, 0, 100, 0.5, 50}, 1e-8), std::domain_error);
  CHECK_THROWS_AS(eval_osc({p, 0.5, 10, 0, 100, 60, 50}, 1e-8), std::domain_error);
  CHECK_THROWS_AS(eval_osc({p, 0.5, 10, 0, 100, 1, 200}, 1e-8), std::domain_error);
  CHECK_THROWS_AS(eval_osc({p, 0.5, 10, 0, 100, 1, 50}, 1e-3), std::domain_error);
  CHECK_THROWS_AS(eval_osc({p, 0.5, 10, 0, 100, 1, 50}, 1e-13), std::domain_error);
}

TEST_CASE("n = 0 integrals match the antiderivative") {
  // int_U^V u^(s-1) du = (V^s - U^s)/s, s = alpha + i gamma / k
  for (double alpha : {-0.5, 0.0, 0.5, 1.0}) {
    for (double gamma : {1.0, 14.0, 300.0, 5000.0}) {
      for (auto [q, u, v] : std::vector<std::array<double, 3>>{
               {100, 1, 99}, {10000, 10, 1000}}) {
        OscIntegralCase c{PowerPair(1, 2), alpha, gamma, 0, q, u, v};
        double tol = 1e-10;
        cd got = eval_osc(c, tol);
        cd s(alpha, gamma);
        cd want = (std::exp(s * std::log(v)) - std::exp(s * std::log(u))) / s;
        CHECK(std::abs(got - want) <= tol * (1.0 + std::abs(want)) * 10);
      }
    }
  }
  // k = 3 divides the log-frequency
  OscIntegralCase c{PowerPair(3, 2), 0.5, 60.0, 0, 400, 2, 390};
  cd s(0.5, 20.0);
  cd want = (std::exp(s * std::log(390.0)) - std::exp(s * std::log(2.0))) / s;
  CHECK(std::abs(eval_osc(c, 1e-11) - want) <= 1e-9);

  // negative gamma conjugates the n = 0 integral
  OscIntegralCase cn{PowerPair(1, 2), 0.5, -35.0, 0, 400, 2, 390};
  cd sn(0.5, -35.0);
  cd wantn = (std::exp(sn * std::log(390.0)) - std::exp(sn * std::log(2.0))) / sn;
  CHECK(std::abs(eval_osc(cn, 1e-10) - wantn) <= 1e-8);
}

TEST_CASE("audit propagates worker failures") {
  // an invalid case (U < 1) must surface as an exception, not a crash
  std::vector<OscIntegralCase> bad{{PowerPair(1, 2), 0.5, 10.0, 1, 100, 0.5, 50}};
  CHECK_THROWS_AS(run_osc_audit(bad, 2), std::runtime_error);
}

TEST_CASE("pure oscillation integrates to zero over whole periods") {
  // int_0^1 e(m u) du = 0 for integer m != 0, driven through the panelled
  // quadrature core directly.
  for (int m : {1, 2, 7, -5}) {
    auto f = [&](double u) -> cd {
      return {std::cos(kTwoPi * m * u), std::sin(kTwoPi * m * u)};
    };
    auto rate = [&](double) { return std::abs(double(m)); };
    cd v = oscillatory_quadrature(f, 0.0, 1.0, 1e-12, rate);
    CHECK(std::abs(v) <= 1e-11);
  }
}

TEST_CASE("substituted path matches the Simpson oracle") {
  // the worked case: (1,2), alpha=1/2, gamma=50, n=3, Q=1e4, U=10, V=1e3
  OscIntegralCase c{PowerPair(1, 2), 0.5, 50.0, 3, 1e4, 10, 1e3};
  cd got = eval_osc(c, 1e-9);
  cd want = simpson_oracle(c, 2000000);
  CHECK(std::abs(got - want) <= 1e-6 * std::abs(want));

  // negative n and k = 2
  OscIntegralCase c2{PowerPair(2, 3), 0.0, 25.0, -4, 2000, 5, 1500};
  cd got2 = eval_osc(c2, 1e-9);
  cd want2 = simpson_oracle(c2, 2000000);
  CHECK(std::abs(got2 - want2) <= 1e-6 * (1.0 + std::abs(want2)));

  // V = Q: the phase derivative blows up at the right endpoint in u-space;
  // the substituted integral is perfectly smooth there
  OscIntegralCase c3{PowerPair(1, 2), 0.5, 30.0, 2, 500, 1, 500};
  cd got3 = eval_osc(c3, 1e-9);
  cd want3 = simpson_oracle(c3, 6000000);
  CHECK(std::abs(got3 - want3) <= 2e-5 * (1.0 + std::abs(want3)));
}

TEST_CASE("halving the tolerance moves the result by at most the old tolerance") {
  OscIntegralCase c{PowerPair(1, 2), 0.5, 200.0, 5, 5000, 2, 4000};
  for (double tol : {1e-6, 1e-8, 1e-10}) {
    cd a = eval_osc(c, tol);
    cd b = eval_osc(c, tol / 2);
    CHECK(std::abs(a - b) <= tol * (1.0 + std::abs(a)));
  }
}

TEST_CASE("non-convergence raises with a partial estimate") {
  // integrable singularity the bisection cannot resolve to 1e-12
  auto f = [](double u) -> cd { return {1.0 / std::sqrt(std::abs(u - 0.31)), 0.0}; };
  auto rate = [](double) { return 0.0; };
  bool threw = false;
  try {
    oscillatory_quadrature(f, 0.0, 1.0, 1e-12, rate);
  } catch (const QuadratureError& e) {
    threw = true;
    CHECK(std::isfinite(e.partial.real()));
    CHECK(e.partial.real() > 1.0);  // the true integral is ~ 3.3
  }
  CHECK(threw);
}

TEST_CASE("exp_int_bound branch selection") {
  // alpha >= 0 without the large-n condition
  auto pos = exp_int_bound({PowerPair(1, 2), 0.5, 100.0, 3, 1e4, 10, 1e3});
  CHECK(pos.branch == BoundBranch::AlphaPos);
  CHECK(pos.bound_value ==
        doctest::Approx(std::sqrt(1e3) * std::log(1e4) / 10.0).epsilon(1e-12));
  CHECK(pos.fitted_ratio <= 10.0);

  // alpha < 0 uses U^alpha
  auto neg = exp_int_bound({PowerPair(1, 2), -0.5, 100.0, 3, 1e4, 10, 1e3});
  CHECK(neg.branch == BoundBranch::AlphaNeg);
  CHECK(neg.bound_value ==
        doctest::Approx(std::pow(10.0, -0.5) * std::log(1e4) / 10.0).epsilon(1e-12));

  // large-n: |n| > ell Q^(1-1/ell) |gamma| and the bound is sharper
  OscIntegralCase big{PowerPair(1, 2), 0.5, 1.0, 1000, 50, 1, 49};
  CHECK(1000.0 > 2 * std::pow(50.0, 0.5) * 1.0);
  auto ln = exp_int_bound(big);
  CHECK(ln.branch == BoundBranch::LargeN);
  CHECK(ln.bound_value == doctest::Approx(std::pow(50.0, 0.5) / 1000.0).epsilon(1e-12));
  CHECK(ln.fitted_ratio <= 10.0);

  // same geometry but large gamma: the condition fails, alpha branch applies
  auto no = exp_int_bound({PowerPair(1, 2), 0.5, 5000.0, 1000, 50, 1, 49});
  CHECK(no.branch == BoundBranch::AlphaPos);
}

TEST_CASE("derivative test demos") {
  // g = 1, f = c x on [0,1]: exact value (e(c)-1)/(2 pi i c), ratio <= 1/pi
  for (double cph : {1.5, 3.0, 12.0}) {
    auto r = derivative_test_demo(DerivativeTestKind::First, {cph, 1}, {0.0}, 0.0, 1.0);
    cd want = (cd(std::cos(kTwoPi * cph), std::sin(kTwoPi * cph)) - 1.0) /
              cd(0.0, kTwoPi * cph);
    CHECK(r.computed_abs == doctest::Approx(std::abs(want)).epsilon(1e-8));
    CHECK(r.branch == BoundBranch::FirstDerivative);
    CHECK(r.fitted_ratio <= 1.0 / 3.141592653589793 + 1e-9);
  }

  // g(x) = x on [1,2], f = c x^2: |f''| = 2c
  for (double cph : {2.0, 40.0}) {
    auto r = derivative_test_demo(DerivativeTestKind::Second, {cph, 2}, {1.0}, 1.0, 2.0);
    CHECK(r.branch == BoundBranch::SecondDerivative);
    // ||g|| = sup + V = 2 + 1 = 3, bound = 3 / sqrt(2c)
    CHECK(r.bound_value == doctest::Approx(3.0 / std::sqrt(2.0 * cph)).epsilon(1e-12));
    CHECK(r.fitted_ratio <= 1.0);
  }

  // monotone amplitude norm is exact: g = x^{-1} on [2, 4]
  auto r = derivative_test_demo(DerivativeTestKind::First, {5.0, 1}, {-1.0}, 2.0, 4.0);
  CHECK(r.bound_value == doctest::Approx((0.5 + 0.25) / 5.0).epsilon(1e-12));

  // misuse of the family
  CHECK_THROWS_AS(derivative_test_demo(DerivativeTestKind::First, {1.0, 2}, {0.0}, 0.0, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(derivative_test_demo(DerivativeTestKind::Second, {1.0, 1}, {0.0}, 1.0, 2.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(derivative_test_demo(DerivativeTestKind::First, {0.0, 1}, {0.0}, 0.0, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(derivative_test_demo(DerivativeTestKind::First, {1.0, 1}, {-2.0}, 0.0, 1.0),
                  std::invalid_argument);
}

TEST_CASE("builtin grid shape") {
  auto grid = builtin_audit_grid();
  CHECK(grid.size() >= 200);
  bool has_large_n = false, has_high_gamma = false, has_zero_n = false;
  for (const auto& c : grid) {
    CHECK(std::abs(c.gamma) >= 1.0);
    CHECK(c.alpha <= 1.0);
    CHECK(1.0 <= c.u);
    CHECK(c.u <= c.v);
    CHECK(c.v <= c.q);
    if (std::abs(double(c.n)) > c.pair.ell * std::pow(c.q, 1.0 - 1.0 / c.pair.ell) *
                                    std::abs(c.gamma))
      has_large_n = true;
    if (c.gamma >= 1e4) has_high_gamma = true;
    if (c.n == 0) has_zero_n = true;
  }
  CHECK(has_large_n);
  CHECK(has_high_gamma);
  CHECK(has_zero_n);
}

TEST_CASE("audit rows on a small subset stay under the ceiling") {
  auto grid = builtin_audit_grid();
  std::vector<OscIntegralCase> subset;
  for (std::size_t i = 0; i < grid.size(); i += 23) subset.push_back(grid[i]);
  auto rows = run_osc_audit(subset, 2);
  REQUIRE(rows.size() == subset.size());
  for (const auto& r : rows) {
    CHECK(r.check.fitted_ratio <= 10.0);
    CHECK(r.check.fitted_ratio >= 0.0);
  }
}
