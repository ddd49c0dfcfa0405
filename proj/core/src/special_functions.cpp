#include "wg/special_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace wg {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Lanczos, g = 7, nine coefficients.
constexpr double kG = 7.0;
constexpr double kCoef[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7,
};

std::complex<double> lanczos_log_gamma(std::complex<double> z) {
  z -= 1.0;
  std::complex<double> x = kCoef[0];
  for (int i = 1; i < 9; ++i) x += kCoef[i] / (z + static_cast<double>(i));
  std::complex<double> t = z + kG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

}  // namespace

std::complex<double> log_gamma(std::complex<double> z) {
  static const bool checked = [] {
    bool ok = std::abs(lanczos_log_gamma({1.0, 0.0})) < 1e-13 &&
              std::abs(std::exp(lanczos_log_gamma({0.5, 0.0})) - std::sqrt(kPi)) < 1e-13;
    if (!ok) throw std::logic_error("log_gamma: Lanczos anchor check failed");
    return true;
  }();
  (void)checked;
  if (z.real() < 0.5) {
    // Reflection through Gamma(z) Gamma(1-z) = pi / sin(pi z).
    return std::log(kPi / std::sin(kPi * z)) - lanczos_log_gamma(1.0 - z);
  }
  return lanczos_log_gamma(z);
}

std::complex<double> complex_gamma(std::complex<double> z) {
  return std::exp(log_gamma(z));
}

std::complex<double> gamma_ratio_coeff(const PowerPair& p, std::complex<double> rho) {
  if (rho == std::complex<double>(0.0, 0.0))
    throw std::domain_error("gamma_ratio_coeff: rho must be nonzero");
  const double inv_ell = 1.0 / p.ell;
  std::complex<double> w = rho / static_cast<double>(p.k);
  std::complex<double> lg =
      log_gamma(w + 1.0) + log_gamma({inv_ell, 0.0}) - log_gamma(w + inv_ell + 1.0);
  return std::exp(lg) / (static_cast<double>(p.ell) * rho);
}

}  // namespace wg
