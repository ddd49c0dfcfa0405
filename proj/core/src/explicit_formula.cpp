#include "wg/explicit_formula.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "wg/kahan.hpp"
#include "wg/sieve.hpp"
#include "wg/special_functions.hpp"

namespace wg {

namespace {

std::complex<double> cpow(double base, std::complex<double> w) {
  return std::exp(w * std::log(base));
}

}  // namespace

ExplicitPsiResult psi_explicit(double x, double t, const ZeroTable& table,
                               unsigned threads) {
  if (!(x >= 2.0)) throw std::domain_error("psi_explicit: x must be >= 2");
  if (!(t >= 0.0) || t > table.max_height())
    throw std::domain_error("psi_explicit: T beyond the loaded zero table");

  const std::size_t m = table.count_upto(t);
  const double lx = std::log(x);
  const double sx = std::sqrt(x);

  // Conjugate zeros are folded analytically:
  //   x^rho/rho + x^conj(rho)/conj(rho) = 2 Re(x^rho/rho),
  // with rho = 1/2 + i gamma and |rho|^2 = 1/4 + gamma^2.
  auto term = [&](double g) {
    return (0.5 * std::cos(g * lx) + g * std::sin(g * lx)) / (0.25 + g * g);
  };

  unsigned nw = m ? std::max(1u, std::min<unsigned>(threads, m)) : 1;
  std::vector<KahanSum> parts(nw);
  auto run = [&](unsigned w, std::size_t i0, std::size_t i1) {
    KahanSum& ks = parts[w];
    for (std::size_t i = i0; i < i1; ++i) ks.add(term(table.gammas[i]));
  };
  if (nw == 1) {
    run(0, 0, m);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < nw; ++w)
      pool.emplace_back(run, w, m * w / nw, m * (w + 1) / nw);
    for (auto& th : pool) th.join();
  }
  KahanSum zero_sum;
  for (const auto& ks : parts) zero_sum.add(ks.value());

  ExplicitPsiResult r;
  r.x = x;
  r.zeros_used = m;
  r.t_used = m ? table.gammas[m - 1] : 0.0;
  r.value = x - 2.0 * sx * zero_sum.value();
  return r;
}

std::complex<double> s_rho(const PowerPair& p, std::complex<double> rho, double q,
                           double x) {
  if (rho == std::complex<double>(0.0, 0.0))
    throw std::domain_error("s_rho: rho must be nonzero");
  if (!(q >= x) || !(x >= 1.0)) throw std::domain_error("s_rho: need Q >= X >= 1");

  const std::complex<double> w = rho / static_cast<double>(p.k);
  const std::uint64_t nmax = iroot(static_cast<std::uint64_t>(x), p.ell);
  KahanSum re, im;
  for (std::uint64_t n = 1; n <= nmax; ++n) {
    double base = q - static_cast<double>(ipow(n, static_cast<unsigned>(p.ell)));
    if (base <= 0.0) {
      if (w.real() > 0.0) continue;  // (0)^(rho/k) -> 0
      throw std::domain_error("s_rho: zero base with non-positive Re(rho)");
    }
    std::complex<double> v = cpow(base, w);
    re.add(v.real());
    im.add(v.imag());
  }
  return std::complex<double>(re.value(), im.value()) / rho;
}

SRhoDiffReport s_rho_diff_audit(const PowerPair& p, double x, double h,
                                const ZeroTable& table, std::size_t count) {
  if (!(h >= 4.0) || !(h <= x)) throw std::domain_error("s_rho_diff_audit: need 4 <= H <= X");
  if (count > table.gammas.size())
    throw std::domain_error("s_rho_diff_audit: count exceeds table size");

  SRhoDiffReport rep;
  rep.k = p.k;
  rep.ell = p.ell;
  rep.x = x;
  rep.h = h;

  const double lx = std::log(x);
  const double beta = 0.5;
  const double cross = 1.0 / p.k + 1.0 / p.ell - 1.0;
  const double inv_ell = 1.0 / p.ell;

  for (std::size_t i = 0; i < count; ++i) {
    const double g = table.gammas[i];
    if (g > 2.0 * x) continue;  // outside the expansion's validity
    const std::complex<double> rho(beta, g);
    const std::complex<double> w = rho / static_cast<double>(p.k);

    std::complex<double> exact = s_rho(p, rho, x + h, x) - s_rho(p, rho, x, x);
    std::complex<double> lead =
        gamma_ratio_coeff(p, rho) *
            (cpow(x + h, w + inv_ell) - cpow(x, w + inv_ell)) -
        (cpow(x + h, w) - cpow(x, w)) / (2.0 * rho);

    SRhoDiffRow row;
    row.gamma = g;
    row.exact_abs = std::abs(exact);
    row.residual = std::abs(exact - lead);
    row.bound = std::pow(h, beta / p.k) * std::pow(g, beta / p.k - 0.5) * lx * lx +
                h * std::pow(x, cross) / g + lx;
    row.ratio = row.residual / row.bound;
    rep.rows.push_back(row);
  }

  rep.max_ratio = 0.0;
  for (const auto& r : rep.rows) rep.max_ratio = std::max(rep.max_ratio, r.ratio);

  // OLS slope of log(residual) against log(gamma).
  double sx_ = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t n = 0;
  for (const auto& r : rep.rows) {
    if (r.residual <= 0.0) continue;
    double lg = std::log(r.gamma), lr = std::log(r.residual);
    sx_ += lg;
    sy += lr;
    sxx += lg * lg;
    sxy += lg * lr;
    ++n;
  }
  rep.gamma_slope =
      n >= 2 ? (n * sxy - sx_ * sy) / (n * sxx - sx_ * sx_) : 0.0;
  return rep;
}

}  // namespace wg
