#pragma once

#include <complex>

#include "wg/power_pair.hpp"

namespace wg {

// Principal-branch log Gamma by a Lanczos approximation (g = 7, 9 terms),
// good to ~1e-13 relative away from the poles.
std::complex<double> log_gamma(std::complex<double> z);
std::complex<double> complex_gamma(std::complex<double> z);

// Gamma(rho/k + 1) Gamma(1/ell) / (ell rho Gamma(rho/k + 1/ell + 1)),
// the coefficient of Q^(rho/k + 1/ell) in the zero-indexed sums.
std::complex<double> gamma_ratio_coeff(const PowerPair& p,
                                       std::complex<double> rho);

}  // namespace wg
