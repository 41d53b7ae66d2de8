#pragma once

#include <map>
#include <utility>

#include "moyal/diffpoly.hpp"
#include "moyal/error.hpp"

namespace moyal::corpus {

/// Dense bivariate polynomial over Rational, used as an evaluation target
/// for differential expressions: generators become concrete polynomials in
/// (x, y), epsilon a rational, and Dxi the antiderivative in x with zero
/// constant. Two formal expressions that differ only by integration
/// bookkeeping (product-rule inversions, integration by parts) evaluate
/// equally whenever the seed polynomials vanish at x = 0, since every
/// boundary term then drops.
class XYPoly {
 public:
  XYPoly() = default;
  explicit XYPoly(const Rational& c) {
    if (!c.is_zero()) coeffs_[{0, 0}] = c;
  }

  static XYPoly monomial(const Rational& c, int xd, int yd) {
    XYPoly p;
    if (!c.is_zero()) p.coeffs_[{xd, yd}] = c;
    return p;
  }

  bool is_zero() const { return coeffs_.empty(); }

  friend XYPoly operator+(const XYPoly& a, const XYPoly& b) {
    XYPoly out = a;
    for (const auto& [k, c] : b.coeffs_) {
      auto [it, inserted] = out.coeffs_.try_emplace(k, c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) out.coeffs_.erase(it);
      }
    }
    return out;
  }

  friend XYPoly operator*(const XYPoly& a, const XYPoly& b) {
    XYPoly out;
    for (const auto& [ka, ca] : a.coeffs_) {
      for (const auto& [kb, cb] : b.coeffs_) {
        std::pair<int, int> k{ka.first + kb.first, ka.second + kb.second};
        auto [it, inserted] = out.coeffs_.try_emplace(k, ca * cb);
        if (!inserted) {
          it->second += ca * cb;
          if (it->second.is_zero()) out.coeffs_.erase(it);
        }
      }
    }
    return out;
  }

  XYPoly scaled(const Rational& c) const {
    XYPoly out;
    if (c.is_zero()) return out;
    for (const auto& [k, v] : coeffs_) out.coeffs_[k] = v * c;
    return out;
  }

  XYPoly deriv_x() const {
    XYPoly out;
    for (const auto& [k, v] : coeffs_)
      if (k.first > 0)
        out.coeffs_[{k.first - 1, k.second}] = v * Rational(k.first);
    return out;
  }

  XYPoly deriv_y() const {
    XYPoly out;
    for (const auto& [k, v] : coeffs_)
      if (k.second > 0)
        out.coeffs_[{k.first, k.second - 1}] = v * Rational(k.second);
    return out;
  }

  XYPoly antideriv_x() const {  // zero constant of integration
    XYPoly out;
    for (const auto& [k, v] : coeffs_)
      out.coeffs_[{k.first + 1, k.second}] =
          v / Rational(k.first + 1);
    return out;
  }

  friend bool operator==(const XYPoly& a, const XYPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::map<std::pair<int, int>, Rational> coeffs_;
};

struct EvalSeed {
  std::map<std::pair<int, int>, XYPoly> generators;  // (family, index) -> value
  Rational eps{2};
};

inline Rational rational_pow(const Rational& base, int k) {
  Rational out(1);
  Rational b = k >= 0 ? base : base.reciprocal();
  for (int i = 0; i < (k >= 0 ? k : -k); ++i) out *= b;
  return out;
}

inline XYPoly evaluate(const DiffPoly& p, const EvalSeed& seed) {
  XYPoly out;
  for (const auto& m : p.terms()) {
    XYPoly term(m.coeff * rational_pow(seed.eps, m.eps));
    for (const Atom& a : m.atoms) {
      XYPoly factor;
      if (a.is_integral()) {
        factor = evaluate(a.body(), seed);
        for (int d = 0; d < a.depth(); ++d) factor = factor.antideriv_x();
      } else {
        auto it = seed.generators.find(
            {static_cast<int>(a.family()), a.index()});
        if (it == seed.generators.end())
          throw Error(Errc::non_local_input,
                      "evaluate: no seed for a generator");
        factor = it->second;
        for (int d = 0; d < a.x_order(); ++d) factor = factor.deriv_x();
        for (int d = 0; d < a.y_order(); ++d) factor = factor.deriv_y();
      }
      term = term * factor;
    }
    out = out + term;
  }
  return out;
}

/// Seeds for a1 alone: x-divisible polynomials so every boundary term at
/// x = 0 vanishes and the zero-constant antiderivative calculus is exact.
inline std::vector<EvalSeed> a1_seeds() {
  std::vector<EvalSeed> seeds;
  {
    EvalSeed s;
    XYPoly v = XYPoly::monomial(Rational(2), 1, 0) +
               XYPoly::monomial(Rational(1), 2, 1) +
               XYPoly::monomial(Rational(-3), 1, 2);
    s.generators[{0, 1}] = v;
    s.eps = Rational(2);
    seeds.push_back(std::move(s));
  }
  {
    EvalSeed s;
    XYPoly v = XYPoly::monomial(Rational(1), 1, 1) +
               XYPoly::monomial(Rational(BigInt(1), BigInt(2)), 3, 0) +
               XYPoly::monomial(Rational(5), 2, 2);
    s.generators[{0, 1}] = v;
    s.eps = Rational(BigInt(1), BigInt(3));
    seeds.push_back(std::move(s));
  }
  {
    EvalSeed s;
    XYPoly v = XYPoly::monomial(Rational(-1), 1, 0) +
               XYPoly::monomial(Rational(2), 1, 3) +
               XYPoly::monomial(Rational(1), 4, 1);
    s.generators[{0, 1}] = v;
    s.eps = Rational(-2);
    seeds.push_back(std::move(s));
  }
  return seeds;
}

}  // namespace moyal::corpus
