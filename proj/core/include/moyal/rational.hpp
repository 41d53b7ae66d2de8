#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>

namespace moyal {

using BigInt = boost::multiprecision::cpp_int;

/// Exact arbitrary-precision rational. Always reduced to lowest terms with a
/// positive denominator; zero is stored as 0/1.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long long n) : value_(n) {}  // NOLINT: implicit by design
  Rational(const BigInt& n) : value_(n) {}
  Rational(const BigInt& num, const BigInt& den);

  static Rational parse(const std::string& text);

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const {
    return boost::multiprecision::denominator(value_);
  }

  bool is_zero() const { return value_.is_zero(); }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return denominator() == 1; }
  bool is_negative() const { return value_ < 0; }

  Rational abs() const { return is_negative() ? -*this : *this; }
  Rational reciprocal() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return a.value_ != b.value_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.value_ < b.value_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }

  /// "-32/9", "5", "1/2"; the form used everywhere in rendered output.
  std::string str() const;

 private:
  boost::multiprecision::cpp_rational value_;
};

/// Generalized binomial coefficient: n(n-1)...(n-k+1)/k! for any integer n
/// and k >= 0. Negative upper index follows the usual falling-factorial
/// extension; k > n >= 0 gives zero.
Rational binomial(long long n, unsigned k);
Rational binomial(const BigInt& n, unsigned k);

/// k! as an exact integer.
BigInt factorial(unsigned k);

}  // namespace moyal
