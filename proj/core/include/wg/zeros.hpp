#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace wg {

// Ordered positive imaginary parts of nontrivial zeta zeros on the critical
// line. Loaded tables must start at the first zero (14.134725...) and be
// strictly increasing.
struct ZeroTable {
  std::vector<double> gammas;
  std::string source;

  double max_height() const { return gammas.back(); }
  std::size_t count_upto(double t) const;
};

// Plain text, one gamma per line, ascending. skip_header drops the first
// line before parsing.
ZeroTable load_zeros(const std::string& path, bool skip_header = false);

}  // namespace wg
