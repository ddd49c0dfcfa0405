#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "wg/power_pair.hpp"
#include "wg/zeros.hpp"

namespace wg {

struct ExplicitPsiResult {
  double x = 0;
  double t_used = 0;  // truncation snapped down to the largest tabulated gamma <= T
  double value = 0;
  std::size_t zeros_used = 0;
};

// Truncated explicit formula x - sum over |gamma| <= T of x^rho / rho, with
// tabulated zeros taken at beta = 1/2 and the +/- gamma pair folded
// analytically to 2 Re(x^rho / rho), so the result is real by construction.
ExplicitPsiResult psi_explicit(double x, double t, const ZeroTable& table,
                               unsigned threads = 1);

// S_rho(Q) = rho^{-1} sum over n^ell <= X of (Q - n^ell)^(rho/k),
// principal-branch complex powers, exact finite sum.
std::complex<double> s_rho(const PowerPair& p, std::complex<double> rho,
                           double q, double x);

struct SRhoDiffRow {
  double gamma = 0;
  double exact_abs = 0;  // |S_rho(X+H) - S_rho(X)|
  double residual = 0;   // after subtracting the two leading closed-form terms
  double bound = 0;      // H^(b/k) |g|^(b/k-1/2) log^2 X + H X^(1/k+1/ell-1)/|g| + log X
  double ratio = 0;
};

struct SRhoDiffReport {
  int k = 1;
  int ell = 2;
  double x = 0;
  double h = 0;
  std::vector<SRhoDiffRow> rows;
  double max_ratio = 0;
  double gamma_slope = 0;  // OLS slope of log residual against log gamma
};

// Residual audit of S_rho(X+H) - S_rho(X) against the leading terms for the
// first `count` tabulated zeros; zeros with gamma > 2X are skipped.
SRhoDiffReport s_rho_diff_audit(const PowerPair& p, double x, double h,
                                const ZeroTable& table, std::size_t count);

}  // namespace wg
