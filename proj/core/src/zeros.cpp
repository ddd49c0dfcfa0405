#include "wg/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <string>

namespace wg {

namespace {

constexpr double kFirstZero = 14.134725;

bool blank(const std::string& s) {
  return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

}  // namespace

std::size_t ZeroTable::count_upto(double t) const {
  return std::upper_bound(gammas.begin(), gammas.end(), t) - gammas.begin();
}

ZeroTable load_zeros(const std::string& path, bool skip_header) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_zeros: cannot open " + path);

  ZeroTable table;
  table.source = path;
  std::string line;
  std::size_t line_no = 0;
  if (skip_header && std::getline(in, line)) ++line_no;

  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    double g = 0;
    std::size_t used = 0;
    try {
      g = std::stod(line, &used);
    } catch (const std::exception&) {
      throw std::runtime_error("load_zeros: parse failure at " + path + ":" +
                               std::to_string(line_no));
    }
    if (!blank(line.substr(used)))
      throw std::runtime_error("load_zeros: trailing garbage at " + path + ":" +
                               std::to_string(line_no));
    if (!(g > 1.0))
      throw std::runtime_error("load_zeros: zero height must exceed 1 at " + path +
                               ":" + std::to_string(line_no));
    if (!table.gammas.empty() && g <= table.gammas.back())
      throw std::runtime_error("load_zeros: non-monotone entry at " + path + ":" +
                               std::to_string(line_no));
    table.gammas.push_back(g);
  }
  if (table.gammas.empty()) throw std::runtime_error("load_zeros: no zeros in " + path);
  if (std::abs(table.gammas.front() - kFirstZero) > 1e-4)
    throw std::runtime_error("load_zeros: table must start at the first zero 14.134725...");
  return table;
}

}  // namespace wg
