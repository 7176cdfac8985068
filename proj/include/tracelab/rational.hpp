#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tracelab {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. Thin wrapper around boost::multiprecision's
/// cpp_rational so the rest of the library stays independent of the backend.
/// Always reduced, denominator > 0, comparisons exact.
class Rational {
public:
  Rational() = default;
  Rational(std::int64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor): scalar literal convenience
  Rational(std::int64_t num, std::int64_t den) : v_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
  }
  Rational(const BigInt& num, const BigInt& den) : v_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
  }

  BigInt num() const { return numerator(v_); }
  BigInt den() const { return denominator(v_); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.v_ == 0) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  double to_double() const { return v_.convert_to<double>(); }

  /// "p/q" (or just "p" when q == 1).
  std::string to_fraction_string() const {
    if (den() == 1) return num().str();
    return num().str() + "/" + den().str();
  }

  /// Decimal expansion truncated toward zero to `places` digits.
  std::string to_decimal_string(int places = 6) const {
    BigInt n = num();
    const BigInt d = den();
    const bool neg = n < 0;
    if (neg) n = -n;
    BigInt ip = n / d, rem = n % d;
    std::string out = (neg && (ip != 0 || rem != 0)) ? "-" : "";
    out += ip.str();
    if (places > 0) {
      out += '.';
      for (int i = 0; i < places; ++i) {
        rem *= 10;
        out += static_cast<char>('0' + static_cast<int>(rem / d));
        rem %= d;
      }
    }
    return out;
  }

  /// Parses "p/q", "p", or nothing else. Throws std::invalid_argument.
  static Rational from_string(const std::string& s) {
    const auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return make(BigInt(s), 1);
      return make(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    } catch (const std::runtime_error&) {
      throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    }
  }

private:
  static Rational make(const BigInt& n, const BigInt& d) { return Rational(n, d); }

  boost::multiprecision::cpp_rational v_ = 0;
};

}  // namespace tracelab
