#pragma once

#include <array>
#include <cstdint>

#include "wg/exact.hpp"
#include "wg/power_pair.hpp"

namespace wg {

// Which of the three exponent candidates wins a cell of the method table.
enum class Method : std::uint8_t { A, B, LZ };
const char* to_string(Method m);

// lambda1(ell): piecewise in ell with breakpoints at 3 and 25/3.
//   ell/(2(ell-1))                                   for 2 <= ell <= 3
//   (3 ell^2 + 2 sqrt(3) ell^(3/2) + ell)/(3ell-1)^2 for 3 <= ell <= 25/3
//   5 ell / (4(3 ell - 5))                           for ell >= 25/3
double lambda1(double ell);

// lambda2(k, ell): piecewise in the ratio r = k/ell with breakpoints at
// 31/96 and 5/8.
//   (2/3)(r + 1/2)                                  for r >= 5/8
//   10/49 + 2r/7 + (4/7) sqrt((6/7)(r - 1/7))       for 31/96 <= r <= 5/8
//   (10/11)(r + 1/4)                                for r <= 31/96
double lambda2(double k, double ell);

// Exact evaluations at rational arguments. Values are rationals or
// quadratic surds, so branch-boundary identities and table comparisons
// can be checked without rounding.
ExactValue lambda1_exact(long long ell_num, long long ell_den = 1);
ExactValue lambda2_exact(long long k_num, long long k_den,
                         long long ell_num, long long ell_den);

// theta_LZ = min(5/(6k), 1/ell).
double theta_lz(const PowerPair& p);
// theta_A = min(lambda1/k, lambda2/k, k/(ell(k-1))), last term dropped at k=1.
double theta_a(const PowerPair& p);
// theta_B = min(5/(12k), k/(ell(k-1))), last term dropped at k=1.
double theta_b(const PowerPair& p);
// theta_C: k=1 variant replaces k/(ell(k-1)) by 2/ell; equals theta_A for k>=2.
double theta_c(const PowerPair& p);

ExactValue theta_lz_exact(const PowerPair& p);
ExactValue theta_a_exact(const PowerPair& p);
ExactValue theta_b_exact(const PowerPair& p);
ExactValue theta_c_exact(const PowerPair& p);
ExactValue theta_exact(const PowerPair& p);      // max(theta_A, theta_B)
ExactValue big_theta_exact(const PowerPair& p);  // 1 - theta

struct ExponentReport {
  int k = 1;
  int ell = 2;
  double theta_lz = 0;
  double theta_a = 0;
  double theta_b = 0;
  double theta_c = 0;
  double theta = 0;      // max(theta_a, theta_b)
  double big_theta = 0;  // 1 - theta
  Method best = Method::A;
  double lambda1 = 0;
  double lambda2 = 0;
};

ExponentReport exponent_report(const PowerPair& p);

// Winning method per cell, rows ell = 2..20, columns k = 1..10.
// A cell is labelled A only when theta_A is strictly the largest; otherwise
// it carries B when theta_B >= theta_LZ and LZ when theta_LZ is larger.
// Comparisons closer than 1e-9 in double precision are settled exactly.
using MethodTable = std::array<std::array<Method, 10>, 19>;
MethodTable table1();

// Admissible window lengths H in [X^(Theta+eps), X^(1-eps)].
struct AdmissibleH {
  double lo_exponent = 0;
  double hi_exponent = 0;
  double lo = 0;
  double hi = 0;
  bool empty = false;
};
AdmissibleH admissible_h(const PowerPair& p, double x, double eps);

// Sub-polynomial factor exp(c (log x / log log x)^(1/3)). Diagnostic only;
// c is a free parameter, nothing downstream depends on it.
double b_factor(double x, double c = 1.0);

}  // namespace wg
