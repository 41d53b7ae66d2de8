#include "moyal/rational.hpp"

#include <stdexcept>

#include "moyal/error.hpp"

namespace moyal {

const char* to_string(Errc code) {
  switch (code) {
    case Errc::parse_error: return "parse error";
    case Errc::non_local_input: return "non-local input";
    case Errc::self_reference: return "self reference";
    case Errc::floor_too_high: return "floor too high";
    case Errc::bad_lax_shape: return "bad Lax shape";
    case Errc::inconsistent_reduction: return "inconsistent reduction";
    case Errc::not_solvable: return "not solvable";
    case Errc::elimination_stuck: return "elimination stuck";
    case Errc::insufficient_depth: return "insufficient depth";
    case Errc::infinite_tail: return "infinite tail";
  }
  return "unknown error";
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den.is_zero()) throw std::invalid_argument("Rational: zero denominator");
  // cpp_rational's two-argument constructor wants the sign on the numerator
  value_ = den < 0 ? boost::multiprecision::cpp_rational(-num, -den)
                   : boost::multiprecision::cpp_rational(num, den);
}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(BigInt(text));
  return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::invalid_argument("Rational: reciprocal of zero");
  Rational r;
  r.value_ = 1 / value_;
  return r;
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

std::string Rational::str() const {
  std::string s = numerator().str();
  if (!is_integer()) s += "/" + denominator().str();
  return s;
}

Rational binomial(const BigInt& n, unsigned k) {
  // Running product stays integral: after t steps it equals binomial(n, t).
  BigInt acc = 1;
  for (unsigned t = 0; t < k; ++t) {
    acc *= n - t;
    acc /= t + 1;
  }
  return Rational(acc);
}

Rational binomial(long long n, unsigned k) { return binomial(BigInt(n), k); }

BigInt factorial(unsigned k) {
  BigInt acc = 1;
  for (unsigned t = 2; t <= k; ++t) acc *= t;
  return acc;
}

}  // namespace moyal
