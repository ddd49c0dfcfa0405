#include "wg/exponents.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace wg {

namespace {

constexpr double kLabelMargin = 1e-9;

void check_real_domain(double k, double ell) {
  if (!(k >= 1.0)) throw std::domain_error("k must be >= 1");
  if (!(ell >= 2.0)) throw std::domain_error("ell must be >= 2");
}

// Double comparison with exact escalation when the gap is inside the margin.
int compare_escalated(double x, double y, const std::function<ExactValue()>& ex,
                      const std::function<ExactValue()>& ey) {
  if (x > y + kLabelMargin) return 1;
  if (x < y - kLabelMargin) return -1;
  auto c = ex() <=> ey();
  return c > 0 ? 1 : (c < 0 ? -1 : 0);
}

}  // namespace

PowerPair::PowerPair(int k_, int ell_) : k(k_), ell(ell_) {
  if (k < 1) throw std::domain_error("PowerPair: k must be >= 1");
  if (ell < 2) throw std::domain_error("PowerPair: ell must be >= 2");
}

const char* to_string(Method m) {
  switch (m) {
    case Method::A: return "A";
    case Method::B: return "B";
    case Method::LZ: return "LZ";
  }
  return "?";
}

double lambda1(double ell) {
  if (!(ell >= 2.0)) throw std::domain_error("lambda1: ell must be >= 2");
  if (ell <= 3.0) return ell / (2.0 * (ell - 1.0));
  if (ell <= 25.0 / 3.0) {
    double s = 3.0 * ell - 1.0;
    return (3.0 * ell * ell + 2.0 * std::sqrt(3.0) * std::pow(ell, 1.5) + ell) / (s * s);
  }
  return 5.0 * ell / (4.0 * (3.0 * ell - 5.0));
}

double lambda2(double k, double ell) {
  check_real_domain(k, ell);
  double r = k / ell;
  if (r >= 5.0 / 8.0) return (2.0 / 3.0) * (r + 0.5);
  if (r >= 31.0 / 96.0)
    return 10.0 / 49.0 + 2.0 * r / 7.0 + (4.0 / 7.0) * std::sqrt((6.0 / 7.0) * (r - 1.0 / 7.0));
  return (10.0 / 11.0) * (r + 0.25);
}

ExactValue lambda1_exact(long long ell_num, long long ell_den) {
  if (ell_den <= 0 || ell_num < 2 * ell_den)
    throw std::domain_error("lambda1_exact: ell must be >= 2");
  const long long p = ell_num, q = ell_den;
  auto ell = ExactValue::rational(p, q);
  if (ell <= ExactValue::rational(3)) {
    // ell / (2(ell-1)) = p / (2(p-q))
    return ExactValue::rational(p, 2 * (p - q));
  }
  if (ell <= ExactValue::rational(25, 3)) {
    // (3 ell^2 + ell)/(3ell-1)^2 + (2 ell/(3ell-1)^2) sqrt(3 ell)
    // with ell = p/q: denominator (3p-q)^2/q^2.
    const long long s = 3 * p - q;
    auto head = ExactValue::rational(3 * p * p + p * q, s * s);
    auto tail = ExactValue::sqrt_rational(3 * p, q).scaled(2 * p * q, s * s);
    return head + tail;
  }
  return ExactValue::rational(5 * p, 4 * (3 * p - 5 * q));
}

ExactValue lambda2_exact(long long k_num, long long k_den, long long ell_num,
                         long long ell_den) {
  if (k_den <= 0 || ell_den <= 0 || k_num < k_den || ell_num < 2 * ell_den)
    throw std::domain_error("lambda2_exact: need k >= 1, ell >= 2");
  // r = k/ell = (k_num * ell_den) / (k_den * ell_num)
  const long long rn = k_num * ell_den;
  const long long rd = k_den * ell_num;
  auto r = ExactValue::rational(rn, rd);
  if (r >= ExactValue::rational(5, 8)) {
    // (2/3)(r + 1/2)
    return r.scaled(2, 3) + ExactValue::rational(1, 3);
  }
  if (r >= ExactValue::rational(31, 96)) {
    // 10/49 + 2r/7 + (4/7) sqrt((6/7)(r - 1/7)) ; (6/7)(r-1/7) = 6(7rn-rd)/(49 rd)
    auto head = ExactValue::rational(10, 49) + r.scaled(2, 7);
    auto tail = ExactValue::sqrt_rational(6 * (7 * rn - rd), 49 * rd).scaled(4, 7);
    return head + tail;
  }
  // (10/11)(r + 1/4)
  return r.scaled(10, 11) + ExactValue::rational(10, 44);
}

double theta_lz(const PowerPair& p) {
  return std::min(5.0 / (6.0 * p.k), 1.0 / p.ell);
}

double theta_a(const PowerPair& p) {
  double v = std::min(lambda1(p.ell) / p.k, lambda2(p.k, p.ell) / p.k);
  if (p.k >= 2) v = std::min(v, double(p.k) / (double(p.ell) * (p.k - 1)));
  return v;
}

double theta_b(const PowerPair& p) {
  double v = 5.0 / (12.0 * p.k);
  if (p.k >= 2) v = std::min(v, double(p.k) / (double(p.ell) * (p.k - 1)));
  return v;
}

double theta_c(const PowerPair& p) {
  if (p.k >= 2) return theta_a(p);
  return std::min({lambda1(p.ell), lambda2(p.k, p.ell), 2.0 / p.ell});
}

ExactValue theta_lz_exact(const PowerPair& p) {
  return ExactValue::min(ExactValue::rational(5, 6 * p.k), ExactValue::rational(1, p.ell));
}

ExactValue theta_a_exact(const PowerPair& p) {
  auto v = ExactValue::min(lambda1_exact(p.ell).scaled(1, p.k),
                           lambda2_exact(p.k, 1, p.ell, 1).scaled(1, p.k));
  if (p.k >= 2)
    v = ExactValue::min(v, ExactValue::rational(p.k, static_cast<long long>(p.ell) * (p.k - 1)));
  return v;
}

ExactValue theta_b_exact(const PowerPair& p) {
  auto v = ExactValue::rational(5, 12 * p.k);
  if (p.k >= 2)
    v = ExactValue::min(v, ExactValue::rational(p.k, static_cast<long long>(p.ell) * (p.k - 1)));
  return v;
}

ExactValue theta_c_exact(const PowerPair& p) {
  if (p.k >= 2) return theta_a_exact(p);
  return ExactValue::min(
      ExactValue::min(lambda1_exact(p.ell), lambda2_exact(p.k, 1, p.ell, 1)),
      ExactValue::rational(2, p.ell));
}

ExactValue theta_exact(const PowerPair& p) {
  return ExactValue::max(theta_a_exact(p), theta_b_exact(p));
}

ExactValue big_theta_exact(const PowerPair& p) {
  return ExactValue::rational(1) - theta_exact(p);
}

namespace {

// A cell is A only when theta_A strictly beats both rivals; the remaining
// cells go to B when theta_B >= theta_LZ and to LZ otherwise. All 39 exact
// theta_A = theta_B ties on the 10x19 grid are B cells and the single
// theta_A = theta_LZ tie (k=5, ell=10) is an LZ cell.
Method best_method(const PowerPair& p, double ta, double tb, double tlz) {
  int ab = compare_escalated(ta, tb, [&] { return theta_a_exact(p); },
                             [&] { return theta_b_exact(p); });
  int alz = compare_escalated(ta, tlz, [&] { return theta_a_exact(p); },
                              [&] { return theta_lz_exact(p); });
  if (ab > 0 && alz > 0) return Method::A;
  int blz = compare_escalated(tb, tlz, [&] { return theta_b_exact(p); },
                              [&] { return theta_lz_exact(p); });
  return blz >= 0 ? Method::B : Method::LZ;
}

}  // namespace

ExponentReport exponent_report(const PowerPair& p) {
  ExponentReport r;
  r.k = p.k;
  r.ell = p.ell;
  r.lambda1 = lambda1(p.ell);
  r.lambda2 = lambda2(p.k, p.ell);
  r.theta_lz = theta_lz(p);
  r.theta_a = theta_a(p);
  r.theta_b = theta_b(p);
  r.theta_c = theta_c(p);
  r.theta = std::max(r.theta_a, r.theta_b);
  r.big_theta = 1.0 - r.theta;
  r.best = best_method(p, r.theta_a, r.theta_b, r.theta_lz);
  return r;
}

MethodTable table1() {
  MethodTable t{};
  for (int ell = 2; ell <= 20; ++ell) {
    for (int k = 1; k <= 10; ++k) {
      PowerPair p(k, ell);
      t[ell - 2][k - 1] = best_method(p, theta_a(p), theta_b(p), theta_lz(p));
    }
  }
  return t;
}

AdmissibleH admissible_h(const PowerPair& p, double x, double eps) {
  if (!(eps > 0)) throw std::domain_error("admissible_h: eps must be > 0");
  if (!(x >= 4)) throw std::domain_error("admissible_h: X must be >= 4");
  const double big_theta = 1.0 - std::max(theta_a(p), theta_b(p));
  AdmissibleH h;
  h.lo_exponent = big_theta + eps;
  h.hi_exponent = 1.0 - eps;
  h.empty = h.lo_exponent > h.hi_exponent;
  h.lo = std::pow(x, h.lo_exponent);
  h.hi = std::pow(x, h.hi_exponent);
  return h;
}

double b_factor(double x, double c) {
  if (!(x > 15.0)) throw std::domain_error("b_factor: need x > e^e");
  const double lx = std::log(x);
  return std::exp(c * std::cbrt(lx / std::log(lx)));
}

}  // namespace wg
