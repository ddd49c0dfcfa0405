#include "wg/reporting.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace wg {

std::string format_sig17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::uint64_t resolve_h_spec(const std::string& spec, std::uint64_t x) {
  if (spec.empty()) throw std::invalid_argument("resolve_h_spec: empty spec");
  if (spec.size() > 2 && (spec[0] == 'X' || spec[0] == 'x') && spec[1] == '^') {
    double e = std::stod(spec.substr(2));
    if (!(e > 0.0) || !(e <= 1.0))
      throw std::invalid_argument("resolve_h_spec: exponent must be in (0, 1]");
    return static_cast<std::uint64_t>(std::ceil(std::pow(static_cast<double>(x), e)));
  }
  double v = std::stod(spec);
  if (!(v >= 1.0) || v > 9.2e18 || v != std::floor(v))
    throw std::invalid_argument("resolve_h_spec: H must be a positive integer");
  return static_cast<std::uint64_t>(v);
}

void emit_plot_data(const std::vector<PlotSeries>& series, const std::string& path) {
  if (series.empty()) throw std::invalid_argument("emit_plot_data: no series");
  std::ofstream out(path);
  if (!out) throw std::runtime_error("emit_plot_data: cannot write " + path);
  out << "series,label,x,y\n";
  for (const auto& s : series)
    for (const auto& [x, y] : s.points)
      out << s.name << ',' << s.label << ',' << format_sig17(x) << ','
          << format_sig17(y) << '\n';
  if (!out) throw std::runtime_error("emit_plot_data: write failed for " + path);
}

void append_experiment_csv(const std::string& path, const ExperimentRecord& r) {
  bool need_header = true;
  {
    std::error_code ec;
    auto sz = std::filesystem::file_size(path, ec);
    need_header = ec || sz == 0;
  }
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("append_experiment_csv: cannot open " + path);
  if (need_header) out << "k,l,X,H,sum,predicted,ratio,seconds\n";
  out << r.k << ',' << r.ell << ',' << r.x << ',' << r.h << ','
      << format_sig17(r.computed_sum) << ',' << format_sig17(r.predicted) << ','
      << format_sig17(r.ratio) << ',' << format_sig17(r.seconds) << '\n';
}

}  // namespace wg
