#include "wg/density.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "wg/exponents.hpp"

namespace wg {

namespace {

constexpr double kBreakLow = 25.0 / 48.0;
constexpr double kBreakHigh = 0.75;

PhiBranch branch_of(double lambda) {
  if (lambda <= kBreakLow) return PhiBranch::LinearLow;
  if (lambda <= kBreakHigh) return PhiBranch::SqrtMid;
  return PhiBranch::LinearHigh;
}

// Strictly increasing map with derivative >= 1/10; bisection to 1e-12 on
// lambda then controls the residual.
PhiEquationSolution bisect_increasing(const std::function<double(double)>& f,
                                      double target) {
  double lo = 0.0;
  double hi = 4.0;
  while (f(hi) < target) hi *= 2.0;  // k/ell can push the root past 4
  for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
    double mid = 0.5 * (lo + hi);
    (f(mid) < target ? lo : hi) = mid;
  }
  PhiEquationSolution s;
  s.lambda_star = 0.5 * (lo + hi);
  s.residual = f(s.lambda_star) - target;
  s.branch = branch_of(s.lambda_star);
  return s;
}

}  // namespace

double phi(double lambda) {
  if (!(lambda >= 0)) throw std::domain_error("phi: lambda must be >= 0");
  if (lambda <= kBreakLow) return 0.6 * lambda + 0.75;
  if (lambda <= kBreakHigh) return 3.0 * lambda + 2.0 * (1.0 - std::sqrt(3.0 * lambda));
  return lambda + 0.5;
}

double c_alpha(double alpha) {
  if (!(alpha >= 0.5) || !(alpha <= 1.0))
    throw std::domain_error("c_alpha: alpha must be in [1/2, 1]");
  if (alpha <= 0.75) return 3.0 * (1.0 - alpha) / (2.0 - alpha);
  return 3.0 * (1.0 - alpha) / (3.0 * alpha - 1.0);
}

double h_density(double lambda, double alpha) {
  return lambda * c_alpha(alpha) + alpha;
}

double h_max(double lambda, double alpha_lo, double alpha_hi) {
  if (!(lambda >= 0)) throw std::domain_error("h_max: lambda must be >= 0");
  if (!(0.5 <= alpha_lo && alpha_lo <= alpha_hi && alpha_hi <= 1.0))
    throw std::domain_error("h_max: need 1/2 <= alpha_lo <= alpha_hi <= 1");

  double best = h_density(lambda, alpha_lo);
  auto consider = [&](double a) { best = std::max(best, h_density(lambda, a)); };
  consider(alpha_hi);

  // Left piece [alpha_lo, min(alpha_hi, 3/4)]: interior critical point.
  double hi1 = std::min(alpha_hi, 0.75);
  if (alpha_lo <= hi1) {
    consider(hi1);
    double crit = 2.0 - std::sqrt(3.0 * lambda);
    if (crit > alpha_lo && crit < hi1) consider(crit);
  }
  // Right piece [max(alpha_lo, 3/4), alpha_hi]: h convex, endpoints only.
  double lo2 = std::max(alpha_lo, 0.75);
  if (lo2 <= alpha_hi) consider(lo2);
  return best;
}

PhiEquationSolution solve_lambda1(double ell) {
  if (!(ell >= 2.0)) throw std::domain_error("solve_lambda1: ell must be >= 2");
  return bisect_increasing([ell](double l) { return phi(l) - l / ell; }, 1.0);
}

PhiEquationSolution solve_lambda2(double k, double ell) {
  if (!(k >= 1.0)) throw std::domain_error("solve_lambda2: k must be >= 1");
  if (!(ell >= 2.0)) throw std::domain_error("solve_lambda2: ell must be >= 2");
  return bisect_increasing([](double l) { return phi(l) + 0.5 * l; }, 1.0 + k / ell);
}

ShiftMarginCheck phi_shift_margin(const PowerPair& p, double eps, double lambda) {
  if (!(eps > 0)) throw std::domain_error("phi_shift_margin: eps must be > 0");
  if (!(lambda >= 0)) throw std::domain_error("phi_shift_margin: lambda must be >= 0");
  const double bound = std::min(lambda1(p.ell), lambda2(p.k, p.ell)) - eps;
  ShiftMarginCheck c;
  c.lambda_in_range = lambda <= bound + 1e-12;
  c.zero_sum_margin = phi(lambda) - lambda / p.ell <= 1.0 - eps / 10.0 + 1e-12;
  c.half_shift_margin =
      phi(lambda) + 0.5 * lambda <= 1.0 + double(p.k) / p.ell - eps / 10.0 + 1e-12;
  return c;
}

}  // namespace wg
