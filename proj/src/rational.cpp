#include "rational.hpp"

#include <cmath>
#include <cstdio>

namespace azi {

namespace mp = boost::multiprecision;

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw_error(ErrorCode::invalid_argument, "rational with zero denominator");
  // Division of two integer-valued rationals normalizes sign and gcd.
  v_ = mp::cpp_rational(num) / mp::cpp_rational(den);
}

Rational Rational::from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
  } catch (const std::runtime_error& e) {
    throw_error(ErrorCode::parse, "malformed rational '" + s + "'");
  }
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw_error(ErrorCode::invalid_argument, "rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::pow(int e) const {
  if (e < 0) {
    if (is_zero()) throw_error(ErrorCode::invalid_argument, "zero to a negative power");
    return Rational(1) / pow(-e);
  }
  Rational result(1);
  Rational base = *this;
  for (; e > 0; e >>= 1) {
    if (e & 1) result *= base;
    if (e > 1) base *= base;
  }
  return result;
}

std::string Rational::to_fraction_string() const {
  return numerator().str() + "/" + denominator().str();
}

std::string Rational::to_decimal_string() const {
  double x = to_double();
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  std::string s(buf);
  // Keep a decimal point so exact integers still read as approximations.
  if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
      s.find("inf") == std::string::npos && s.find("nan") == std::string::npos) {
    s += ".0";
  }
  return s;
}

}  // namespace azi
