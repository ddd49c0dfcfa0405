#pragma once

namespace wg {

// Compensated summation. Long weighted prime sums run to ~1e8 summands;
// compensation keeps the relative error well below 1e-10.
struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double v) {
    double y = v - carry;
    double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }

  double value() const { return sum; }
};

}  // namespace wg
