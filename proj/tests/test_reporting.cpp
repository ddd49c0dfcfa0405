#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "wg/reporting.hpp"

using namespace wg;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("format_sig17 round-trips doubles") {
  for (double v : {0.33689931867694556, 1.0 / 3.0, 1e-17, 6.02214076e23, -2.5}) {
    CHECK(std::stod(format_sig17(v)) == v);
  }
}

TEST_CASE("h spec parsing") {
  CHECK(resolve_h_spec("1000", 0) == 1000);
  CHECK(resolve_h_spec("1e6", 0) == 1000000);
  CHECK(resolve_h_spec("X^0.55", 10000000) == 7080);  // ceil(1e7^0.55)
  CHECK(resolve_h_spec("x^0.5", 1000000) == 1000);
  CHECK(resolve_h_spec("X^1", 4096) == 4096);
  CHECK_THROWS_AS(resolve_h_spec("", 10), std::invalid_argument);
  CHECK_THROWS_AS(resolve_h_spec("X^0", 10), std::invalid_argument);
  CHECK_THROWS_AS(resolve_h_spec("X^1.5", 10), std::invalid_argument);
  CHECK_THROWS_AS(resolve_h_spec("12.5", 10), std::invalid_argument);
  CHECK_THROWS_AS(resolve_h_spec("-3", 10), std::invalid_argument);
}

TEST_CASE("plot data emission") {
  auto path = temp_path("wg_plot.csv");
  PlotSeries s;
  s.name = "phi";
  s.label = "phi(lambda)";
  s.points = {{0.0, 0.75}, {1.0, 1.5}};
  emit_plot_data({s}, path);
  auto text = slurp(path);
  CHECK(text == "series,label,x,y\nphi,phi(lambda),0,0.75\nphi,phi(lambda),1,1.5\n");

  // determinism: emitting twice yields byte-identical output
  emit_plot_data({s}, path);
  CHECK(slurp(path) == text);

  CHECK_THROWS_AS(emit_plot_data({}, path), std::invalid_argument);
}

TEST_CASE("experiment ledger append") {
  auto path = temp_path("wg_ledger.csv");
  std::remove(path.c_str());
  ExperimentRecord r;
  r.k = 1;
  r.ell = 2;
  r.x = 1000000;
  r.h = 7080;
  r.computed_sum = 7.1e6;
  r.predicted = 7.08e6;
  r.ratio = r.computed_sum / r.predicted;
  r.seconds = 0.25;
  append_experiment_csv(path, r);
  append_experiment_csv(path, r);
  auto text = slurp(path);
  // one header and two identical rows
  CHECK(text.rfind("k,l,X,H,sum,predicted,ratio,seconds\n", 0) == 0);
  std::size_t rows = 0;
  for (char ch : text)
    if (ch == '\n') ++rows;
  CHECK(rows == 3);
}
