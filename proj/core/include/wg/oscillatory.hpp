#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "wg/power_pair.hpp"

namespace wg {

// One oscillatory integral int_U^V u^(alpha + i gamma/k - 1) e(n (Q-u)^(1/ell)) du
// with e(x) = exp(2 pi i x).
struct OscIntegralCase {
  PowerPair pair{1, 2};
  double alpha = 0;  // <= 1
  double gamma = 1;  // |gamma| >= 1
  long long n = 0;   // Poisson frequency, any sign
  double q = 2;
  double u = 1;      // 1 <= u <= v <= q
  double v = 2;
};

class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, std::complex<double> partial_estimate)
      : std::runtime_error(what), partial(partial_estimate) {}
  std::complex<double> partial;
};

// Adaptive Gauss--Kronrod integration of a complex integrand. cycle_rate
// bounds the local oscillation (cycles per unit length) and drives the
// initial panel decomposition: no panel spans more than 1/8 of a cycle.
// Throws QuadratureError with the partial estimate on non-convergence.
std::complex<double> oscillatory_quadrature(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    double abs_tol, const std::function<double(double)>& cycle_rate);

// Evaluates the case integral to absolute error <= tol * (1 + |result|),
// tol in [1e-12, 1e-4]. For n != 0 the variable change u = Q - t^ell is
// applied first: it turns the root phase into a linear one and removes the
// endpoint blow-up of the phase derivative at u -> Q.
std::complex<double> eval_osc(const OscIntegralCase& c, double tol);

enum class BoundBranch : std::uint8_t {
  AlphaPos,          // V^alpha log Q / sqrt(|gamma|)
  AlphaNeg,          // U^alpha log Q / sqrt(|gamma|)
  LargeN,            // Q^(1 - 1/ell) / |n|, only when |n| > ell Q^(1-1/ell) |gamma|
  FirstDerivative,   // ||g|| / lambda
  SecondDerivative,  // ||g|| / sqrt(lambda)
};
const char* to_string(BoundBranch b);

struct BoundCheck {
  double computed_abs = 0;
  double bound_value = 0;
  BoundBranch branch = BoundBranch::AlphaPos;
  double fitted_ratio = 0;
};

// Evaluates the integral and checks it against the sharpest applicable
// branch bound.
BoundCheck exp_int_bound(const OscIntegralCase& c);

enum class DerivativeTestKind : std::uint8_t { First, Second };

// Built-in family for the derivative tests: monomial phase f(x) = c x^m and
// monotone amplitude g(x) = x^e, with lambda = min |f'| (resp. min |f''|)
// known in closed form.
struct MonomialPhase {
  double coeff = 1;
  int degree = 1;
};
struct PowerAmplitude {
  double exponent = 0;
};

BoundCheck derivative_test_demo(DerivativeTestKind kind, const MonomialPhase& f,
                                const PowerAmplitude& g, double a, double b);

// Deterministic audit grid: >= 200 valid cases spanning gamma in [1, 1e4],
// n in [-1e3, 1e3] and pairs (1,2), (2,3), (3,2).
std::vector<OscIntegralCase> builtin_audit_grid();

struct OscAuditRow {
  OscIntegralCase c;
  BoundCheck check;
};

std::vector<OscAuditRow> run_osc_audit(const std::vector<OscIntegralCase>& grid,
                                       unsigned threads = 1);

}  // namespace wg
