#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace parafock {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar: arbitrary-precision, always reduced, denominator > 0.
/// Every sign/rank decision in the engine runs through this type; there is no
/// floating point anywhere on a verdict path.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long long n) : v_(BigInt(n)) {}
  Rational(const BigInt& n) : v_(n) {}
  Rational(BigInt num, BigInt den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    v_ = boost::multiprecision::cpp_rational(num, den);
  }

  static Rational parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
      return Rational(parse_int(text), 1);
    }
    return Rational(parse_int(text.substr(0, slash)),
                    parse_int(text.substr(slash + 1)));
  }

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_.is_zero(); }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return v_.sign(); }

  /// "n" for integers, "n/d" otherwise; the canonical text form used by all
  /// serialized output.
  std::string str() const {
    std::string s = numerator().str();
    if (!is_integer()) {
      s += '/';
      s += denominator().str();
    }
    return s;
  }

  Rational operator-() const { return Rational(-v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

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

 private:
  explicit Rational(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}

  static BigInt parse_int(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("Rational: empty numeral");
    const bool negative = text[0] == '-';
    if (text[0] == '+' || text[0] == '-') text.remove_prefix(1);
    if (text.empty()) throw std::invalid_argument("Rational: bare sign");
    for (char ch : text) {
      if (ch < '0' || ch > '9') {
        throw std::invalid_argument("Rational: bad numeral");
      }
    }
    BigInt value{std::string(text)};
    return negative ? -value : value;
  }

  boost::multiprecision::cpp_rational v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace parafock
