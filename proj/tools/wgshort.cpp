// wgshort: numerical workbench for short-interval averages of the
// representation function of N = p^k + n^ell.
//
// Subcommands mirror the library surface: exponent evaluation, the method
// table, the phi-equation solver, sieve experiments, main-term and lattice
// checks, explicit-formula and zero-sum audits, the oscillatory-integral
// audit, and tidy plot-data export.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "wg/arith.hpp"
#include "wg/density.hpp"
#include "wg/explicit_formula.hpp"
#include "wg/exponents.hpp"
#include "wg/oscillatory.hpp"
#include "wg/reporting.hpp"
#include "wg/sieve.hpp"
#include "wg/zeros.hpp"

using json = nlohmann::ordered_json;

namespace {

std::string fmt(double v) { return wg::format_sig17(v); }

void write_output(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << j.dump(2) << "\n";
}

std::uint64_t parse_x(const std::string& s) {
  double v = std::stod(s);
  if (!(v >= 4.0) || v > 4.5e18 || v != std::floor(v))
    throw std::invalid_argument("--x must be an integer >= 4");
  return static_cast<std::uint64_t>(v);
}

struct GlobalOpts {
  unsigned threads = 1;
};

void add_exponents(CLI::App& app, GlobalOpts& g) {
  auto* cmd = app.add_subcommand("exponents", "Exponent report for one (k, ell)");
  auto k = std::make_shared<int>(1);
  auto ell = std::make_shared<int>(2);
  auto x = std::make_shared<std::string>("");
  auto bc = std::make_shared<double>(1.0);
  auto out = std::make_shared<std::string>("");
  cmd->add_option("--k", *k, "prime power")->required();
  cmd->add_option("--l", *ell, "integer power")->required();
  cmd->add_option("--x", *x, "include the B-factor diagnostic at this X");
  cmd->add_option("--bfactor-c", *bc, "constant c in the B factor (default 1)");
  cmd->add_option("--out", *out, "output path (default stdout)");
  cmd->callback([&g, k, ell, x, bc, out] {
    (void)g;
    auto rep = wg::exponent_report(wg::PowerPair(*k, *ell));
    json j;
    j["k"] = rep.k;
    j["l"] = rep.ell;
    j["lambda1"] = fmt(rep.lambda1);
    j["lambda2"] = fmt(rep.lambda2);
    j["theta_LZ"] = fmt(rep.theta_lz);
    j["theta_A"] = fmt(rep.theta_a);
    j["theta_B"] = fmt(rep.theta_b);
    j["theta_C"] = fmt(rep.theta_c);
    j["theta"] = fmt(rep.theta);
    j["Theta"] = fmt(rep.big_theta);
    j["best"] = wg::to_string(rep.best);
    if (!x->empty())
      j["b_factor"] = fmt(wg::b_factor(std::stod(*x), *bc));
    write_output(j, *out);
  });
}

void add_table1(CLI::App& app) {
  auto* cmd = app.add_subcommand("table1", "Best-method table, ell=2..20 x k=1..10");
  auto out = std::make_shared<std::string>("");
  cmd->add_option("--out", *out, "CSV path (default stdout)");
  cmd->callback([out] {
    auto t = wg::table1();
    std::string csv = "l,k1,k2,k3,k4,k5,k6,k7,k8,k9,k10\n";
    for (int ell = 2; ell <= 20; ++ell) {
      csv += std::to_string(ell);
      for (int k = 1; k <= 10; ++k) {
        csv += ',';
        csv += wg::to_string(t[ell - 2][k - 1]);
      }
      csv += '\n';
    }
    if (out->empty()) {
      std::cout << csv;
    } else {
      std::ofstream f(*out);
      if (!f) throw std::runtime_error("cannot write " + *out);
      f << csv;
    }
  });
}

void add_solve_phi(CLI::App& app) {
  auto* cmd = app.add_subcommand("solve-phi", "Bisection solutions of the phi equations");
  auto k = std::make_shared<double>(1.0);
  auto ell = std::make_shared<double>(2.0);
  auto out = std::make_shared<std::string>("");
  cmd->add_option("--k", *k, "prime power (real)")->required();
  cmd->add_option("--l", *ell, "integer power (real)")->required();
  cmd->add_option("--out", *out, "output path (default stdout)");
  cmd->callback([k, ell, out] {
    auto s1 = wg::solve_lambda1(*ell);
    auto s2 = wg::solve_lambda2(*k, *ell);
    json j;
    j["l"] = *ell;
    j["k"] = *k;
    j["lambda1"] = fmt(s1.lambda_star);
    j["lambda2"] = fmt(s2.lambda_star);
    j["residuals"] = {fmt(s1.residual), fmt(s2.residual)};
    j["closed_form_deltas"] = {fmt(s1.lambda_star - wg::lambda1(*ell)),
                               fmt(s2.lambda_star - wg::lambda2(*k, *ell))};
    write_output(j, *out);
  });
}

void add_sieve_experiment(CLI::App& app, GlobalOpts& g) {
  auto* cmd = app.add_subcommand("sieve-experiment",
                                 "Window sum vs predicted main term");
  auto k = std::make_shared<int>(1);
  auto ell = std::make_shared<int>(2);
  auto x = std::make_shared<std::string>("");
  auto h = std::make_shared<std::string>("");
  auto weight = std::make_shared<std::string>("logp");
  auto out = std::make_shared<std::string>("");
  auto ledger = std::make_shared<std::string>("experiments.csv");
  cmd->add_option("--k", *k)->required();
  cmd->add_option("--l", *ell)->required();
  cmd->add_option("--x", *x, "window start X (integer, 1e7 form accepted)")->required();
  cmd->add_option("--h", *h, "window length: integer or X^0.55 form")->required();
  cmd->add_option("--weight", *weight)->check(CLI::IsMember({"logp", "lambda"}));
  cmd->add_option("--out", *out, "JSON report path (default stdout)");
  cmd->add_option("--ledger", *ledger, "CSV ledger to append (default experiments.csv)");
  cmd->callback([&g, k, ell, x, h, weight, out, ledger] {
    std::uint64_t xv = parse_x(*x);
    std::uint64_t hv = wg::resolve_h_spec(*h, xv);
    auto w = *weight == "lambda" ? wg::Weight::Lambda : wg::Weight::LogP;
    auto r = wg::run_sieve_experiment(wg::PowerPair(*k, *ell), xv, hv, w, g.threads);
    wg::append_experiment_csv(*ledger, r);
    json j;
    j["k"] = r.k;
    j["l"] = r.ell;
    j["X"] = r.x;
    j["H"] = r.h;
    j["weight"] = *weight;
    j["sum"] = fmt(r.computed_sum);
    j["predicted"] = fmt(r.predicted);
    j["ratio"] = fmt(r.ratio);
    j["seconds"] = fmt(r.seconds);
    write_output(j, *out);
  });
}

void add_main_term_check(CLI::App& app) {
  auto* cmd = app.add_subcommand("main-term-check",
                                 "S(X+H) - S(X) against the main term");
  auto k = std::make_shared<int>(1);
  auto ell = std::make_shared<int>(2);
  auto x = std::make_shared<std::string>("");
  auto h = std::make_shared<std::string>("");
  auto out = std::make_shared<std::string>("");
  cmd->add_option("--k", *k)->required();
  cmd->add_option("--l", *ell)->required();
  cmd->add_option("--x", *x)->required();
  cmd->add_option("--h", *h)->required();
  cmd->add_option("--out", *out);
  cmd->callback([k, ell, x, h, out] {
    wg::PowerPair p(*k, *ell);
    std::uint64_t xv = parse_x(*x);
    std::uint64_t hv = wg::resolve_h_spec(*h, xv);
    double xd = double(xv), hd = double(hv);
    double diff = wg::s_direct(p, xd + hd, xd) - wg::s_direct(p, xd, xd);
    double mt = wg::main_term(p, xd, hd);
    double shape = std::pow(hd, 1.0 + 1.0 / *k) * std::pow(xd, 1.0 / *ell - 1.0) +
                   std::pow(hd, 1.0 / *k);
    json j;
    j["k"] = *k;
    j["l"] = *ell;
    j["X"] = xv;
    j["H"] = hv;
    j["S_diff"] = fmt(diff);
    j["main_term"] = fmt(mt);
    j["abs_error"] = fmt(std::abs(diff - mt));
    j["error_shape"] = fmt(shape);
    j["fitted_constant"] = fmt(std::abs(diff - mt) / shape);
    write_output(j, *out);
  });
}

void add_lattice_count(CLI::App& app, GlobalOpts& g) {
  auto* cmd = app.add_subcommand("lattice-count",
                                 "Lattice solutions of X < m^k + n^ell <= X+H");
  auto k = std::make_shared<int>(1);
  auto ell = std::make_shared<int>(2);
  auto x = std::make_shared<std::string>("");
  auto h = std::make_shared<std::string>("");
  auto out = std::make_shared<std::string>("");
  cmd->add_option("--k", *k)->required();
  cmd->add_option("--l", *ell)->required();
  cmd->add_option("--x", *x)->required();
  cmd->add_option("--h", *h)->required();
  cmd->add_option("--out", *out);
  cmd->callback([&g, k, ell, x, h, out] {
    wg::PowerPair p(*k, *ell);
    std::uint64_t xv = parse_x(*x);
    std::uint64_t hv = wg::resolve_h_spec(*h, xv);
    std::uint64_t count = wg::lattice_count(p, xv, hv, g.threads);
    double shape = double(hv) * std::pow(double(xv), 1.0 / *k + 1.0 / *ell - 1.0);
    json j;
    j["k"] = *k;
    j["l"] = *ell;
    j["X"] = xv;
    j["H"] = hv;
    j["count"] = count;
    j["main_shape"] = fmt(shape);
    j["ratio"] = fmt(double(count) / shape);
    write_output(j, *out);
  });
}

void add_explicit_formula(CLI::App& app, GlobalOpts& g) {
  auto* cmd = app.add_subcommand("explicit-formula",
                                 "Truncated explicit formula against psi");
  auto zeros = std::make_shared<std::string>("");
  auto x = std::make_shared<std::string>("");
  auto t = std::make_shared<double>(1000.0);
  auto grid = std::make_shared<unsigned>(1);
  auto skip_header = std::make_shared<bool>(false);
  auto out = std::make_shared<std::string>("");
  cmd->add_option("--zeros", *zeros, "zero table path")->envname("WG_ZEROS_PATH")->required();
  cmd->add_option("--x", *x)->required();
  cmd->add_option("--t", *t, "truncation height");
  cmd->add_option("--grid", *grid, "sample points on [X, 2X] (default 1)");
  cmd->add_flag("--skip-header", *skip_header, "zero table has a header line");
  cmd->add_option("--out", *out);
  cmd->callback([&g, zeros, x, t, grid, skip_header, out] {
    auto table = wg::load_zeros(*zeros, *skip_header);
    std::uint64_t x0 = parse_x(*x);
    unsigned n = std::max(1u, *grid);
    std::vector<std::uint64_t> xs;
    for (unsigned i = 0; i < n; ++i)
      xs.push_back(n == 1 ? x0 : x0 + (x0 * static_cast<std::uint64_t>(i)) / (n - 1));
    auto direct = wg::psi_many(xs);
    json pts = json::array();
    double fitted = 0.0, t_used = 0.0;
    std::size_t used = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      double xd = double(xs[i]);
      auto r = wg::psi_explicit(xd, *t, table, g.threads);
      double err = std::abs(r.value - direct[i]);
      double lx = std::log(xd);
      double bound = xd / *t * lx * lx;
      fitted = std::max(fitted, err / bound);
      t_used = r.t_used;
      used = r.zeros_used;
      json row;
      row["x"] = xs[i];
      row["psi_direct"] = fmt(direct[i]);
      row["psi_explicit"] = fmt(r.value);
      row["error"] = fmt(err);
      row["bound"] = fmt(bound);
      pts.push_back(row);
    }
    json j;
    if (pts.size() == 1) {
      j = pts[0];  // single point: flat {x, psi_direct, psi_explicit, error, bound}
    } else {
      j["points"] = pts;
    }
    j["T"] = fmt(*t);
    j["t_used"] = fmt(t_used);
    j["zeros_used"] = used;
    j["fitted_constant"] = fmt(fitted);
    write_output(j, *out);
  });
}

void add_s_rho_audit(CLI::App& app) {
  auto* cmd = app.add_subcommand("s-rho-audit",
                                 "Zero-indexed sum differences vs leading terms");
  auto zeros = std::make_shared<std::string>("");
  auto k = std::make_shared<int>(1);
  auto ell = std::make_shared<int>(2);
  auto x = std::make_shared<double>(1e5);
  auto h = std::make_shared<double>(1e3);
  auto count = std::make_shared<std::size_t>(50);
  auto skip_header = std::make_shared<bool>(false);
  auto out = std::make_shared<std::string>("");
  cmd->add_option("--zeros", *zeros)->envname("WG_ZEROS_PATH")->required();
  cmd->add_option("--k", *k)->required();
  cmd->add_option("--l", *ell)->required();
  cmd->add_option("--x", *x)->required();
  cmd->add_option("--h", *h)->required();
  cmd->add_option("--count", *count, "number of zeros to audit");
  cmd->add_flag("--skip-header", *skip_header);
  cmd->add_option("--out", *out);
  cmd->callback([zeros, k, ell, x, h, count, skip_header, out] {
    auto table = wg::load_zeros(*zeros, *skip_header);
    auto rep = wg::s_rho_diff_audit(wg::PowerPair(*k, *ell), *x, *h, table, *count);
    json rows = json::array();
    for (const auto& r : rep.rows) {
      json row;
      row["gamma"] = fmt(r.gamma);
      row["exact_abs"] = fmt(r.exact_abs);
      row["residual"] = fmt(r.residual);
      row["bound"] = fmt(r.bound);
      row["ratio"] = fmt(r.ratio);
      rows.push_back(row);
    }
    json j;
    j["k"] = rep.k;
    j["l"] = rep.ell;
    j["X"] = fmt(rep.x);
    j["H"] = fmt(rep.h);
    j["rows"] = rows;
    j["max_ratio"] = fmt(rep.max_ratio);
    j["gamma_slope"] = fmt(rep.gamma_slope);
    write_output(j, *out);
  });
}

void add_osc_audit(CLI::App& app, GlobalOpts& g) {
  auto* cmd = app.add_subcommand("osc-audit",
                                 "Oscillatory integral bounds over a case grid");
  auto grid = std::make_shared<std::string>("builtin");
  auto out = std::make_shared<std::string>("report.csv");
  auto limit = std::make_shared<std::size_t>(0);
  cmd->add_option("--grid", *grid, "builtin or a JSON case file");
  cmd->add_option("--out", *out, "CSV report path");
  cmd->add_option("--limit", *limit, "cap the number of cases (0 = all)");
  cmd->callback([&g, grid, out, limit] {
    std::vector<wg::OscIntegralCase> cases;
    if (*grid == "builtin") {
      cases = wg::builtin_audit_grid();
    } else {
      std::ifstream in(*grid);
      if (!in) throw std::runtime_error("cannot read " + *grid);
      json spec = json::parse(in);
      for (const auto& c : spec) {
        cases.push_back({wg::PowerPair(c.at("k").get<int>(), c.at("l").get<int>()),
                         c.at("alpha").get<double>(), c.at("gamma").get<double>(),
                         c.at("n").get<long long>(), c.at("q").get<double>(),
                         c.at("u").get<double>(), c.at("v").get<double>()});
      }
    }
    if (*limit && cases.size() > *limit) cases.resize(*limit);
    auto rows = wg::run_osc_audit(cases, g.threads);
    std::ofstream f(*out);
    if (!f) throw std::runtime_error("cannot write " + *out);
    f << "k,l,alpha,gamma,n,Q,U,V,computed_abs,bound,branch,ratio\n";
    double worst = 0.0;
    for (const auto& r : rows) {
      f << r.c.pair.k << ',' << r.c.pair.ell << ',' << fmt(r.c.alpha) << ','
        << fmt(r.c.gamma) << ',' << r.c.n << ',' << fmt(r.c.q) << ',' << fmt(r.c.u)
        << ',' << fmt(r.c.v) << ',' << fmt(r.check.computed_abs) << ','
        << fmt(r.check.bound_value) << ',' << wg::to_string(r.check.branch) << ','
        << fmt(r.check.fitted_ratio) << '\n';
      worst = std::max(worst, r.check.fitted_ratio);
    }
    json j;
    j["cases"] = rows.size();
    j["out"] = *out;
    j["max_ratio"] = fmt(worst);
    std::cout << j.dump(2) << "\n";
  });
}

void add_plot_data(CLI::App& app, GlobalOpts& g) {
  auto* cmd = app.add_subcommand("plot-data", "Tidy CSV series for plotting");
  auto series = std::make_shared<std::string>("phi");
  auto out = std::make_shared<std::string>("plot.csv");
  auto points = std::make_shared<unsigned>(1001);
  auto k = std::make_shared<int>(1);
  auto ell = std::make_shared<int>(2);
  auto h_exp = std::make_shared<double>(0.55);
  auto x_min = std::make_shared<double>(1e5);
  auto x_max = std::make_shared<double>(1e6);
  auto x = std::make_shared<std::string>("100000");
  auto zeros = std::make_shared<std::string>("");
  auto skip_header = std::make_shared<bool>(false);
  cmd->add_option("--series", *series)
      ->check(CLI::IsMember({"phi", "ratio-vs-x", "ef-error-vs-t"}));
  cmd->add_option("--out", *out);
  cmd->add_option("--points", *points);
  cmd->add_option("--k", *k);
  cmd->add_option("--l", *ell);
  cmd->add_option("--h-exp", *h_exp, "H = ceil(X^e) for ratio-vs-x");
  cmd->add_option("--x-min", *x_min);
  cmd->add_option("--x-max", *x_max);
  cmd->add_option("--x", *x, "evaluation point for ef-error-vs-t");
  cmd->add_option("--zeros", *zeros)->envname("WG_ZEROS_PATH");
  cmd->add_flag("--skip-header", *skip_header);
  cmd->callback([&g, series, out, points, k, ell, h_exp, x_min, x_max, x, zeros,
                 skip_header] {
    wg::PlotSeries s;
    if (*series == "phi") {
      s.name = "phi";
      s.label = "phi(lambda)";
      unsigned n = std::max(2u, *points);
      for (unsigned i = 0; i < n; ++i) {
        double lam = double(i) / (n - 1);
        s.points.emplace_back(lam, wg::phi(lam));
      }
    } else if (*series == "ratio-vs-x") {
      s.name = "ratio";
      s.label = "window/main k=" + std::to_string(*k) + " l=" + std::to_string(*ell) +
                " H=X^" + std::to_string(*h_exp);
      unsigned n = std::max(2u, *points);
      for (unsigned i = 0; i < n; ++i) {
        double xd = *x_min * std::pow(*x_max / *x_min, double(i) / (n - 1));
        auto xv = static_cast<std::uint64_t>(xd);
        auto hv = static_cast<std::uint64_t>(
            std::ceil(std::pow(double(xv), *h_exp)));
        auto r = wg::run_sieve_experiment(wg::PowerPair(*k, *ell), xv, hv,
                                          wg::Weight::LogP, g.threads);
        s.points.emplace_back(double(xv), r.ratio);
      }
    } else {
      if (zeros->empty())
        throw std::invalid_argument("ef-error-vs-t needs --zeros (or WG_ZEROS_PATH)");
      auto table = wg::load_zeros(*zeros, *skip_header);
      std::uint64_t xv = parse_x(*x);
      double direct = wg::psi(xv);
      s.name = "ef_error";
      s.label = "|psi - psi_explicit| at x=" + *x;
      unsigned n = std::max(2u, std::min<unsigned>(*points, table.gammas.size()));
      for (unsigned i = 0; i < n; ++i) {
        std::size_t idx = (table.gammas.size() - 1) * static_cast<std::size_t>(i) / (n - 1);
        double t = table.gammas[idx];
        auto r = wg::psi_explicit(double(xv), t, table, g.threads);
        s.points.emplace_back(t, std::abs(r.value - direct));
      }
    }
    wg::emit_plot_data({s}, *out);
    json j;
    j["series"] = s.name;
    j["rows"] = s.points.size();
    j["out"] = *out;
    std::cout << j.dump(2) << "\n";
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Short-interval prime power representation workbench"};
  app.require_subcommand(1);
  // --h is a real option below, so help is long-form only
  app.set_help_flag("--help", "print help");
  app.set_config("--config", "", "key=value config file; flags win");
  app.allow_config_extras(false);  // unknown config keys are rejected

  GlobalOpts g;
  app.add_option("--threads", g.threads, "worker threads inside module operations")
      ->capture_default_str();

  add_exponents(app, g);
  add_table1(app);
  add_solve_phi(app);
  add_sieve_experiment(app, g);
  add_main_term_check(app);
  add_lattice_count(app, g);
  add_explicit_formula(app, g);
  add_s_rho_audit(app);
  add_osc_audit(app, g);
  add_plot_data(app, g);
  // global flags (--threads, --config) may come after the subcommand name
  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough(true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    json err;
    err["error"] = e.what();
    err["context"] = argc > 1 ? argv[1] : "";
    std::cout << err.dump(2) << "\n";
    return 1;
  }
  return 0;
}
