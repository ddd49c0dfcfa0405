#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wg/arith.hpp"

namespace wg {

// Shortest 17-significant-digit decimal; round-trips any double.
std::string format_sig17(double v);

// Window length specification: either "X^0.55" (resolved to ceil(x^0.55))
// or a plain positive integer such as "1000" or "1e6".
std::uint64_t resolve_h_spec(const std::string& spec, std::uint64_t x);

struct PlotSeries {
  std::string name;
  std::string label;
  std::vector<std::pair<double, double>> points;
};

// Tidy CSV with header series,label,x,y.
void emit_plot_data(const std::vector<PlotSeries>& series,
                    const std::string& path);

// Appends one row to the experiment ledger, creating it (with header
// k,l,X,H,sum,predicted,ratio,seconds) when missing.
void append_experiment_csv(const std::string& path, const ExperimentRecord& r);

}  // namespace wg
