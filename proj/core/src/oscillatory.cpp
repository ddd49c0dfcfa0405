#include "wg/oscillatory.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

#include "wg/kahan.hpp"

namespace wg {

namespace {

using cd = std::complex<double>;

constexpr double kTwoPi = 6.283185307179586476925286766559;

// 7/15 Gauss--Kronrod nodes and weights on [-1, 1].
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {0.129484966168870, 0.279705391489277,
                           0.381830050505119, 0.417959183673469};

cd gk15(const std::function<cd(double)>& f, double a, double b, double& err) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  cd fc = f(mid);
  cd k15 = kWgk[7] * fc;
  cd g7 = kWg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    double dx = half * kXgk[i];
    cd fs = f(mid + dx) + f(mid - dx);
    k15 += kWgk[i] * fs;
    if (i % 2 == 1) g7 += kWg[i / 2] * fs;
  }
  k15 *= half;
  g7 *= half;
  // Kronrod error heuristic: the 15-point rule is of much higher order, so
  // a small G7/K15 gap overstates the K15 error; rescale it when converged.
  double d = std::abs(k15 - g7);
  err = std::min(d, std::pow(200.0 * d, 1.5));
  return k15;
}

struct Segment {
  double a, b, tol;
};

// Adaptive bisection with an explicit stack. Segments are emitted left to
// right, so the accumulation order is reproducible. A segment is also
// accepted once its error estimate reaches the double-precision floor of
// its own value; the caller weighs the accumulated estimate against the
// global budget.
cd adaptive(const std::function<cd(double)>& f, double a, double b, double tol,
            double& err_out) {
  constexpr std::size_t kMaxSegments = std::size_t(1) << 18;
  const double min_width = (b - a) * 1e-12;

  std::vector<Segment> stack;
  stack.push_back({a, b, tol});
  KahanSum re, im, errs;
  std::size_t processed = 0;

  while (!stack.empty()) {
    Segment s = stack.back();
    stack.pop_back();
    double err = 0;
    cd v = gk15(f, s.a, s.b, err);
    bool at_floor = err <= 1e-14 * (1.0 + std::abs(v));
    if (err <= s.tol || at_floor || s.b - s.a <= min_width ||
        ++processed > kMaxSegments) {
      re.add(v.real());
      im.add(v.imag());
      errs.add(err);
      continue;
    }
    double mid = 0.5 * (s.a + s.b);
    // push right first so the left half is processed next
    stack.push_back({mid, s.b, 0.5 * s.tol});
    stack.push_back({s.a, mid, 0.5 * s.tol});
  }
  err_out += errs.value();
  return {re.value(), im.value()};
}

int validate_tol(double tol) {
  if (!(tol >= 1e-12) || !(tol <= 1e-4))
    throw std::domain_error("eval_osc: tol must lie in [1e-12, 1e-4]");
  return 0;
}

void validate_case(const OscIntegralCase& c) {
  if (!(c.alpha <= 1.0)) throw std::domain_error("osc case: alpha must be <= 1");
  if (!(std::abs(c.gamma) >= 1.0))
    throw std::domain_error("osc case: |gamma| must be >= 1");
  if (!(1.0 <= c.u && c.u <= c.v && c.v <= c.q))
    throw std::domain_error("osc case: need 1 <= U <= V <= Q");
}

// t_hi^ell - t^ell factored as (t_hi - t) * sum_j t_hi^j t^(ell-1-j); all
// terms positive, so q - t^ell can be formed without cancellation even when
// q is many orders above u.
double power_diff(double t_hi, double t, int ell) {
  double s = 0.0;
  for (int j = 0; j < ell; ++j) {
    double term = 1.0;
    for (int i = 0; i < j; ++i) term *= t_hi;
    for (int i = 0; i < ell - 1 - j; ++i) term *= t;
    s += term;
  }
  return (t_hi - t) * s;
}

}  // namespace

const char* to_string(BoundBranch b) {
  switch (b) {
    case BoundBranch::AlphaPos: return "alpha_pos";
    case BoundBranch::AlphaNeg: return "alpha_neg";
    case BoundBranch::LargeN: return "large_n";
    case BoundBranch::FirstDerivative: return "first_derivative";
    case BoundBranch::SecondDerivative: return "second_derivative";
  }
  return "?";
}

std::complex<double> oscillatory_quadrature(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    double abs_tol, const std::function<double(double)>& cycle_rate) {
  if (!(b >= a)) throw std::domain_error("oscillatory_quadrature: b < a");
  if (a == b) return {0.0, 0.0};

  // Initial mesh: no panel longer than 1/8 cycle of the local oscillation.
  constexpr std::size_t kMaxPanels = std::size_t(1) << 23;
  const double span = b - a;
  const double floor_w = span / static_cast<double>(kMaxPanels);
  std::vector<double> edges{a};
  for (double t = a; t < b;) {
    double r = std::max(cycle_rate(t), 1e-300);
    double w = 1.0 / (8.0 * r);
    double r2 = std::max(cycle_rate(std::min(b, t + w)), r);
    w = std::max(std::min(1.0 / (8.0 * r2), span), floor_w);
    t = (b - t <= w) ? b : t + w;
    edges.push_back(t);
  }

  KahanSum re, im;
  double err_total = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    double ptol = abs_tol * (edges[i + 1] - edges[i]) / span;
    cd v = adaptive(f, edges[i], edges[i + 1], ptol, err_total);
    re.add(v.real());
    im.add(v.imag());
  }
  cd total{re.value(), im.value()};
  if (err_total > abs_tol * (1.0 + std::abs(total)))
    throw QuadratureError("oscillatory_quadrature: refinement limit reached", total);
  return total;
}

std::complex<double> eval_osc(const OscIntegralCase& c, double tol) {
  validate_tol(tol);
  validate_case(c);

  const double k = c.pair.k;
  const int ell = c.pair.ell;
  const cd s_minus_1(c.alpha - 1.0, c.gamma / k);

  if (c.n == 0) {
    auto f = [&](double u) { return std::exp(s_minus_1 * std::log(u)); };
    auto rate = [&](double u) { return std::abs(c.gamma) / (kTwoPi * k * u); };
    return oscillatory_quadrature(f, c.u, c.v, tol, rate);
  }

  // u = q - t^ell; the phase n(q-u)^(1/ell) becomes the linear 2 pi n t and
  // the former endpoint blow-up of the phase derivative at u -> q vanishes.
  const double t_lo = std::pow(std::max(c.q - c.v, 0.0), 1.0 / ell);
  const double t_hi = std::pow(c.q - c.u, 1.0 / ell);
  const double u_right = static_cast<double>(
      static_cast<long double>(c.q) -
      static_cast<long double>(std::pow(static_cast<long double>(t_hi), ell)));
  const double nn = static_cast<double>(c.n);

  auto u_of = [&](double t) {
    return std::max(u_right + power_diff(t_hi, t, ell), 1e-300);
  };
  auto f = [&](double t) -> cd {
    double tp = 1.0;
    for (int i = 0; i < ell - 1; ++i) tp *= t;
    cd amp = static_cast<double>(ell) * tp * std::exp(s_minus_1 * std::log(u_of(t)));
    double ph = kTwoPi * nn * t;
    return amp * cd(std::cos(ph), std::sin(ph));
  };
  auto rate = [&](double t) {
    double tp = 1.0;
    for (int i = 0; i < ell - 1; ++i) tp *= t;
    return std::abs(nn) + std::abs(c.gamma) * ell * tp / (kTwoPi * k * u_of(t));
  };
  return oscillatory_quadrature(f, t_lo, t_hi, tol, rate);
}

BoundCheck exp_int_bound(const OscIntegralCase& c) {
  validate_case(c);
  const double big_l = std::log(c.q);
  const double ag = std::abs(c.gamma);

  BoundCheck out;
  if (c.alpha >= 0.0) {
    out.branch = BoundBranch::AlphaPos;
    out.bound_value = std::pow(c.v, c.alpha) * big_l / std::sqrt(ag);
  } else {
    out.branch = BoundBranch::AlphaNeg;
    out.bound_value = std::pow(c.u, c.alpha) * big_l / std::sqrt(ag);
  }
  if (c.n != 0) {
    double threshold = c.pair.ell * std::pow(c.q, 1.0 - 1.0 / c.pair.ell) * ag;
    double an = std::abs(static_cast<double>(c.n));
    if (an > threshold) {
      double bn = std::pow(c.q, 1.0 - 1.0 / c.pair.ell) / an;
      if (bn < out.bound_value) {  // sharpest applicable claim
        out.branch = BoundBranch::LargeN;
        out.bound_value = bn;
      }
    }
  }
  out.computed_abs = std::abs(eval_osc(c, 1e-9));
  out.fitted_ratio = out.computed_abs / out.bound_value;
  return out;
}

BoundCheck derivative_test_demo(DerivativeTestKind kind, const MonomialPhase& f,
                                const PowerAmplitude& g, double a, double b) {
  if (!(0.0 <= a && a < b))
    throw std::invalid_argument("derivative_test_demo: need 0 <= a < b");
  if (f.coeff == 0.0 || f.degree < 1)
    throw std::invalid_argument("derivative_test_demo: degenerate phase");
  if (a == 0.0 && g.exponent < 0.0)
    throw std::invalid_argument("derivative_test_demo: amplitude blows up at 0");

  const double c = std::abs(f.coeff);
  const int m = f.degree;
  double lambda = 0.0;
  if (kind == DerivativeTestKind::First) {
    lambda = m == 1 ? c : c * m * std::pow(a, m - 1);
  } else {
    if (m < 2)
      throw std::invalid_argument("derivative_test_demo: phase has no curvature");
    lambda = m == 2 ? 2.0 * c : c * m * (m - 1) * std::pow(a, m - 2);
  }
  if (!(lambda > 0.0))
    throw std::invalid_argument("derivative_test_demo: lambda vanishes on the interval");

  // Monotone amplitude: ||g|| = sup + total variation, both exact.
  const double ga = std::pow(a, g.exponent);
  const double gb = std::pow(b, g.exponent);
  const double norm_g = std::max(ga, gb) + std::abs(gb - ga);

  auto integrand = [&](double x) -> cd {
    double ph = kTwoPi * f.coeff * std::pow(x, m);
    return std::pow(x, g.exponent) * cd(std::cos(ph), std::sin(ph));
  };
  auto rate = [&](double x) { return c * m * std::pow(x, m - 1); };
  cd val = oscillatory_quadrature(integrand, a, b, 1e-11 * (1.0 + norm_g * (b - a)),
                                  rate);

  BoundCheck out;
  out.branch = kind == DerivativeTestKind::First ? BoundBranch::FirstDerivative
                                                 : BoundBranch::SecondDerivative;
  out.computed_abs = std::abs(val);
  out.bound_value =
      norm_g * (kind == DerivativeTestKind::First ? 1.0 / lambda
                                                  : 1.0 / std::sqrt(lambda));
  out.fitted_ratio = out.computed_abs / out.bound_value;
  return out;
}

std::vector<OscIntegralCase> builtin_audit_grid() {
  std::vector<OscIntegralCase> all;
  const PowerPair pairs[] = {{1, 2}, {2, 3}, {3, 2}};
  struct Geo {
    double q, u, v;
  };

  // Alpha-branch coverage: moderate n, gamma spanning [1, 1e4].
  {
    const Geo geos[] = {{1e4, 10, 1e3}, {100, 1, 99}};
    const double gammas[] = {1, 30, 1e3, 1e4};
    const long long ns[] = {-7, -1, 0, 1, 3};
    const double alphas[] = {-0.5, 0, 0.5, 1};
    for (const auto& p : pairs)
      for (const auto& ge : geos)
        for (double g : gammas)
          for (long long n : ns)
            for (double al : alphas)
              all.push_back({p, al, g, n, ge.q, ge.u, ge.v});
  }
  // Large-n branch: |n| > ell Q^(1-1/ell) |gamma| needs small Q and gamma.
  {
    const Geo geos[] = {{50, 1, 49}, {100, 2, 90}};
    const double gammas[] = {1, 2};
    const long long ns[] = {-1000, -500, 500, 1000};
    const double alphas[] = {-0.5, 0, 0.5, 1};
    for (const auto& p : pairs)
      for (const auto& ge : geos)
        for (double g : gammas)
          for (long long n : ns)
            for (double al : alphas)
              all.push_back({p, al, g, n, ge.q, ge.u, ge.v});
  }
  // Every second case keeps the grid above 300 rows at a manageable runtime.
  std::vector<OscIntegralCase> grid;
  for (std::size_t i = 0; i < all.size(); i += 2) grid.push_back(all[i]);
  return grid;
}

std::vector<OscAuditRow> run_osc_audit(const std::vector<OscIntegralCase>& grid,
                                       unsigned threads) {
  std::vector<OscAuditRow> rows(grid.size());
  std::vector<std::string> errors(grid.size());
  unsigned nw = grid.empty() ? 1 : std::max(1u, std::min<unsigned>(threads, grid.size()));
  auto run = [&](std::size_t i0, std::size_t i1) {
    for (std::size_t i = i0; i < i1; ++i) {
      try {
        rows[i] = {grid[i], exp_int_bound(grid[i])};
      } catch (const std::exception& e) {
        errors[i] = e.what();  // rethrown on the caller's thread
      }
    }
  };
  if (nw == 1) {
    run(0, grid.size());
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < nw; ++w)
      pool.emplace_back(run, grid.size() * w / nw, grid.size() * (w + 1) / nw);
    for (auto& t : pool) t.join();
  }
  for (std::size_t i = 0; i < errors.size(); ++i)
    if (!errors[i].empty())
      throw std::runtime_error("osc audit case " + std::to_string(i) + ": " + errors[i]);
  return rows;
}

}  // namespace wg
