#include "wg/exact.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace wg {

namespace {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// d -> s^2 * f with f square-free; returns s and leaves f in d.
BigInt extract_square(BigInt& d) {
  BigInt s = 1;
  for (BigInt p = 2; p * p <= d; ++p) {
    while (d % (p * p) == 0) {
      d /= p * p;
      s *= p;
    }
  }
  return s;
}

// Sign of A + B*sqrt(d); d >= 0 need not be square-free.
int sign_affine(const BigRat& a, const BigRat& b, const BigInt& d) {
  if (b == 0 || d == 0) return a.sign();
  if (a == 0) return b.sign();
  int sa = a.sign();
  int sb = b.sign();
  if (sa == sb) return sa;
  BigRat a2 = a * a;
  BigRat b2d = b * b * BigRat(d);
  if (a2 == b2d) return 0;
  return a2 > b2d ? sa : sb;
}

// Sign of A + B*sqrt(d) + C*sqrt(e). Squares at most twice, so all
// intermediate quantities stay rational and the result is exact.
int sign_two_radicals(const BigRat& a, const BigRat& b, const BigInt& d,
                      const BigRat& c, const BigInt& e) {
  if (b == 0 || d == 0) return sign_affine(a, c, e);
  if (c == 0 || e == 0) return sign_affine(a, b, d);
  if (d == e) return sign_affine(a, b + c, d);

  int su;
  int sb = b.sign();
  int sc = c.sign();
  if (sb == sc) {
    su = sb;
  } else {
    BigRat b2d = b * b * BigRat(d);
    BigRat c2e = c * c * BigRat(e);
    su = (b2d == c2e) ? 0 : (b2d > c2e ? sb : sc);
  }
  if (a == 0) return su;
  int sa = a.sign();
  if (su == 0) return sa;
  if (sa == su) return sa;
  // Opposite signs: decide |A| vs |u| through
  // A^2 - u^2 = (A^2 - B^2 d - C^2 e) - 2BC sqrt(d e).
  BigRat head = a * a - b * b * BigRat(d) - c * c * BigRat(e);
  int cmp = sign_affine(head, BigRat(-2) * b * c, d * e);
  if (cmp == 0) return 0;
  return cmp > 0 ? sa : su;
}

BigRat make_rat(long long num, long long den) {
  if (den == 0) throw std::domain_error("ExactValue: zero denominator");
  return BigRat(BigInt(num), BigInt(den));
}

double rat_to_double(const BigRat& r) {
  return static_cast<double>(boost::multiprecision::numerator(r)) /
         static_cast<double>(boost::multiprecision::denominator(r));
}

}  // namespace

struct ExactValue::Impl {
  BigRat a;
  BigRat b;
  BigInt d;  // square-free, 0 iff b == 0

  Impl() : a(0), b(0), d(0) {}
  Impl(BigRat a_, BigRat b_, BigInt d_) : a(std::move(a_)), b(std::move(b_)), d(std::move(d_)) {
    normalize();
  }

  void normalize() {
    if (d < 0) throw std::domain_error("ExactValue: negative radicand");
    if (b == 0 || d == 0) {
      b = 0;
      d = 0;
      return;
    }
    BigInt s = extract_square(d);
    if (d == 1) {  // radical collapsed to a rational
      a += b * BigRat(s);
      b = 0;
      d = 0;
      return;
    }
    if (s != 1) b *= BigRat(s);
  }
};

ExactValue::ExactValue() : impl_(std::make_shared<const Impl>()) {}
ExactValue::ExactValue(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

ExactValue ExactValue::rational(long long num, long long den) {
  return ExactValue(std::make_shared<const Impl>(make_rat(num, den), BigRat(0), BigInt(0)));
}

ExactValue ExactValue::sqrt_rational(long long num, long long den) {
  BigRat r = make_rat(num, den);
  if (r < 0) throw std::domain_error("ExactValue: sqrt of negative rational");
  if (r == 0) return ExactValue();
  // sqrt(p/q) = sqrt(p q) / q
  BigInt p = boost::multiprecision::numerator(r);
  BigInt q = boost::multiprecision::denominator(r);
  return ExactValue(std::make_shared<const Impl>(BigRat(0), BigRat(BigInt(1), q), p * q));
}

ExactValue ExactValue::operator+(const ExactValue& rhs) const {
  const Impl& x = *impl_;
  const Impl& y = *rhs.impl_;
  if (y.b == 0) return ExactValue(std::make_shared<const Impl>(x.a + y.a, x.b, x.d));
  if (x.b == 0) return ExactValue(std::make_shared<const Impl>(x.a + y.a, y.b, y.d));
  if (x.d != y.d)
    throw std::logic_error("ExactValue: addition across distinct radicals");
  return ExactValue(std::make_shared<const Impl>(x.a + y.a, x.b + y.b, x.d));
}

ExactValue ExactValue::operator-() const {
  const Impl& x = *impl_;
  return ExactValue(std::make_shared<const Impl>(-x.a, -x.b, x.d));
}

ExactValue ExactValue::operator-(const ExactValue& rhs) const { return *this + (-rhs); }

ExactValue ExactValue::scaled(long long num, long long den) const {
  BigRat s = make_rat(num, den);
  const Impl& x = *impl_;
  if (s == 0) return ExactValue();
  return ExactValue(std::make_shared<const Impl>(x.a * s, x.b * s, x.d));
}

std::strong_ordering ExactValue::operator<=>(const ExactValue& rhs) const {
  const Impl& x = *impl_;
  const Impl& y = *rhs.impl_;
  int s = sign_two_radicals(x.a - y.a, x.b, x.d, -y.b, y.d);
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool ExactValue::operator==(const ExactValue& rhs) const {
  return (*this <=> rhs) == std::strong_ordering::equal;
}

bool ExactValue::is_rational() const { return impl_->b == 0; }

double ExactValue::to_double() const {
  const Impl& x = *impl_;
  double out = rat_to_double(x.a);
  if (x.b != 0) out += rat_to_double(x.b) * std::sqrt(static_cast<double>(x.d));
  return out;
}

std::string ExactValue::str() const {
  const Impl& x = *impl_;
  std::ostringstream os;
  os << x.a;
  if (x.b != 0) os << " + " << x.b << "*sqrt(" << x.d << ")";
  return os.str();
}

ExactValue ExactValue::min(const ExactValue& x, const ExactValue& y) {
  return (y < x) ? y : x;
}

ExactValue ExactValue::max(const ExactValue& x, const ExactValue& y) {
  return (x < y) ? y : x;
}

}  // namespace wg
