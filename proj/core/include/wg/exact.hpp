#pragma once

#include <compare>
#include <memory>
#include <string>

namespace wg {

// Exact real number of the form a + b*sqrt(d) with rational a, b and a
// non-negative integer radicand d. This covers every closed-form exponent
// value that appears in the method comparison (rationals and quadratic
// surds over small integers), and gives rounding-free comparisons for
// label decisions that a floating-point margin cannot settle.
//
// Addition is defined for operands whose radicands are compatible after
// canonicalization (one side rational, or both over the same square-free d);
// incompatible radicands throw. Comparison is total and exact for all
// operands.
class ExactValue {
 public:
  ExactValue();  // zero
  static ExactValue rational(long long num, long long den = 1);
  // sqrt(num/den), num/den >= 0.
  static ExactValue sqrt_rational(long long num, long long den = 1);

  ExactValue operator+(const ExactValue& rhs) const;
  ExactValue operator-(const ExactValue& rhs) const;
  ExactValue operator-() const;
  // Multiplication by an exact rational.
  ExactValue scaled(long long num, long long den = 1) const;

  std::strong_ordering operator<=>(const ExactValue& rhs) const;
  bool operator==(const ExactValue& rhs) const;

  bool is_rational() const;
  double to_double() const;
  std::string str() const;

  static ExactValue min(const ExactValue& x, const ExactValue& y);
  static ExactValue max(const ExactValue& x, const ExactValue& y);

 private:
  struct Impl;
  explicit ExactValue(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

}  // namespace wg
