#pragma once

#include <cstdint>

#include "wg/power_pair.hpp"

namespace wg {

// Zero-sum exponent function:
//   (3/5) lambda + 3/4             0 <= lambda <= 25/48
//   3 lambda + 2(1 - sqrt(3 lambda))   25/48 <= lambda <= 3/4
//   lambda + 1/2                   lambda >= 3/4 (last branch extended)
// Its derivative lies in [3/5, 1].
double phi(double lambda);

// Huxley--Ingham zero-density exponent on [1/2, 1]:
//   3(1-alpha)/(2-alpha)   on [1/2, 3/4]
//   3(1-alpha)/(3alpha-1)  on [3/4, 1]
double c_alpha(double alpha);

// h(alpha) = lambda * c(alpha) + alpha, the exponent being maximized when
// a dyadic zero block is bounded.
double h_density(double lambda, double alpha);

// Maximum of h_density(lambda, .) over [alpha_lo, alpha_hi] inside [1/2, 1].
// On [1/2, 3/4] the only interior critical point is alpha = 2 - sqrt(3 lambda);
// on [3/4, 1] h is convex in alpha, so endpoints suffice.
double h_max(double lambda, double alpha_lo, double alpha_hi);

enum class PhiBranch : std::uint8_t { LinearLow, SqrtMid, LinearHigh };

struct PhiEquationSolution {
  double lambda_star = 0;
  double residual = 0;
  PhiBranch branch = PhiBranch::LinearLow;
};

// Bisection on phi(l) - l/ell = 1. The map is strictly increasing, so the
// root is unique; tolerance 1e-12 on lambda within bracket [0, 4].
PhiEquationSolution solve_lambda1(double ell);
// Bisection on phi(l) + l/2 = 1 + k/ell.
PhiEquationSolution solve_lambda2(double k, double ell);

struct ShiftMarginCheck {
  bool lambda_in_range = false;    // lambda <= min(lambda1, lambda2) - eps
  bool zero_sum_margin = false;    // phi(l) - l/ell <= 1 - eps/10
  bool half_shift_margin = false;  // phi(l) + l/2  <= 1 + k/ell - eps/10
};

// Checks both slack inequalities at a given lambda. A lambda above the
// admissible range is reported through lambda_in_range, not asserted.
ShiftMarginCheck phi_shift_margin(const PowerPair& p, double eps, double lambda);

}  // namespace wg
