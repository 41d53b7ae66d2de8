#pragma once

#include <map>
#include <optional>

#include "moyal/diffpoly.hpp"

namespace moyal {

/// Laurent symbol in p over DiffPoly coefficients.
///
/// `floor()` is the exactness floor: coefficients at exponents >= floor are
/// exact, anything below is untracked. A disengaged floor means the symbol
/// is an exact Laurent polynomial — every unstored coefficient is exactly
/// zero. Literal expressions parse as exact; truncated objects (a Lax symbol
/// tracked to finite depth, a windowed star product) carry a finite floor.
/// Requesting a coefficient below a finite floor is an error, never a
/// silent zero.
class PSymbol {
 public:
  PSymbol() = default;

  static PSymbol zero() { return {}; }
  static PSymbol one() { return p_power(0); }
  static PSymbol p_power(int exponent);
  static PSymbol from_poly(DiffPoly coeff, int exponent = 0);

  bool is_zero() const { return coeffs_.empty(); }
  bool exact() const { return !floor_.has_value(); }
  std::optional<int> floor() const { return floor_; }

  /// Highest stored exponent; disengaged for the zero symbol.
  std::optional<int> degree() const;

  /// Coefficient at exponent i. Throws Errc::floor_too_high below a finite
  /// floor; returns zero at untouched exponents at or above it.
  const DiffPoly& coeff(int i) const;

  const std::map<int, DiffPoly>& coeffs() const { return coeffs_; }

  /// Same coefficient map, floor ignored.
  bool same_terms(const PSymbol& g) const { return coeffs_ == g.coeffs_; }

  /// Coefficients agree at every exponent >= from.
  bool agrees_with(const PSymbol& g, int from) const;

  /// Strict equality: floor state and coefficients.
  friend bool operator==(const PSymbol& f, const PSymbol& g) {
    return f.floor_ == g.floor_ && f.coeffs_ == g.coeffs_;
  }

  PSymbol operator-() const;
  friend PSymbol operator+(const PSymbol& f, const PSymbol& g);
  friend PSymbol operator-(const PSymbol& f, const PSymbol& g);

  PSymbol scaled(const Rational& c, int eps_shift = 0) const;

  /// Commutative coefficient product (the classical, epsilon-free limit of
  /// the star product).
  friend PSymbol classical_mul(const PSymbol& f, const PSymbol& g);

  /// Drop stored coefficients below t and raise the floor to t. Unlike
  /// project, the result still describes the same (possibly deeper) object,
  /// just tracked on a smaller window.
  PSymbol truncated_to(int t) const;

  /// Keep monomials with eps exponent in [lo, hi] in every coefficient.
  PSymbol eps_window(int lo, int hi) const;

  void set_coeff(int exponent, DiffPoly c);
  void set_floor(std::optional<int> f) { floor_ = f; }

 private:
  std::map<int, DiffPoly> coeffs_;
  std::optional<int> floor_;
};

/// Moyal star product. The s-th order term applies s mixed (p, x)
/// derivatives split binomially between the factors, carries e^s, and lands
/// s exponents lower; d/dp acts exactly on all integer exponents.
///
/// The result floor is the tightest exponent from which every contribution
/// is known: max(floor_f + deg g, floor_g + deg f) for truncated inputs.
/// `window_floor` additionally truncates the result (needed when both
/// inputs are exact but the full product has an infinite tail, which throws
/// Errc::infinite_tail if no window is given).
PSymbol star_mul(const PSymbol& f, const PSymbol& g,
                 std::optional<int> window_floor = std::nullopt);

/// Left-to-right iterated star product with intermediate windows chosen so
/// the result is exact at all exponents >= floor (throws
/// Errc::insufficient_depth when the input's floor cannot support that).
PSymbol star_pow(const PSymbol& f, unsigned m, int floor);

/// Keep exponents >= threshold as a new exact symbol (the projected object
/// has exact zeros below). The input must be exact there: floor <= threshold
/// or Errc::floor_too_high.
PSymbol project(const PSymbol& f, int threshold);

/// f*g - g*f, computed as twice the odd-order half of the star sum; one
/// exponent more exact than composing two star_mul calls since the s=0
/// layer cancels identically.
PSymbol commutator(const PSymbol& f, const PSymbol& g,
                   std::optional<int> window_floor = std::nullopt);

/// Coefficient of p^-1. Floor must reach it (<= -1) or Errc::floor_too_high.
DiffPoly residue(const PSymbol& f);

/// d_p f d_x g - d_x f d_p g, classical (no epsilon).
PSymbol poisson_bracket(const PSymbol& f, const PSymbol& g);

}  // namespace moyal
