#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "error.hpp"

namespace azi {

using BigInt = boost::multiprecision::cpp_int;

// Exact signed rational, always stored reduced with positive denominator.
// Backed by boost::multiprecision so index values and bound values never
// overflow or round; comparisons are exact trichotomies.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit from integers is intended
  Rational(const BigInt& n) : v_(n) {}
  Rational(const BigInt& num, const BigInt& den);

  static Rational from_string(const std::string& s);  // "p/q" or "p"

  const BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  const BigInt denominator() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_.is_zero(); }
  bool is_integer() const { return denominator() == 1; }

  Rational operator-() const;
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  // -1, 0, +1 according to the sign of *this - o.
  int compare(const Rational& o) const {
    if (v_ < o.v_) return -1;
    if (v_ > o.v_) return 1;
    return 0;
  }

  // Integer power; negative exponents invert (error on zero base).
  Rational pow(int e) const;

  // Canonical "p/q" form, denominator always printed ("40/1").
  std::string to_fraction_string() const;

  // Display-only decimal approximation, 12 significant digits. Never used
  // for comparisons.
  std::string to_decimal_string() const;
  double to_double() const { return v_.convert_to<double>(); }

 private:
  boost::multiprecision::cpp_rational v_;
};

// Convenience constructor matching the "rat(num, den)" reading used in tests.
inline Rational rat(long num, long den) { return Rational(BigInt(num), BigInt(den)); }

}  // namespace azi
