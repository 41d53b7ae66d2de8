#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "moyal/rational.hpp"

namespace moyal {

class DiffPoly;

/// Generator families. `a` are the Lax coefficients, `w` (omega) the dressing
/// tail, `u` the dressing-inverse tail. omega/u generators depend on x only.
enum class Family : std::uint8_t { a = 0, w = 1, u = 2 };

char family_char(Family f);

/// (family, index) pair naming one generator, e.g. a3 or w1.
struct GenId {
  Family family;
  int index;

  friend bool operator==(const GenId&, const GenId&) = default;
};

enum class Var { x, y };

/// One generator occurrence carrying mixed derivative orders, or a formal
/// antiderivative Dxi^depth(body) wrapping a whole polynomial.
///
/// Integral bodies are always a single monomial with coefficient 1 and no
/// epsilon factor (scalars are pulled out by integrate_x), and are never of
/// the single-atom exact-x-derivative shape (integrate_x lowers those
/// instead of wrapping). Route all Integral construction through
/// integrate_x to keep these invariants.
class Atom {
 public:
  static Atom generator(Family f, int index, int x_order = 0, int y_order = 0);
  static Atom generator(GenId id, int x_order = 0, int y_order = 0);
  static Atom integral(DiffPoly body, int depth);

  bool is_integral() const { return body_ != nullptr; }

  Family family() const { return family_; }
  int index() const { return index_; }
  int x_order() const { return x_order_; }
  int y_order() const { return y_order_; }
  GenId gen_id() const { return {family_, index_}; }

  const DiffPoly& body() const { return *body_; }
  int depth() const { return depth_; }

  friend bool operator==(const Atom& a, const Atom& b) { return cmp(a, b) == 0; }

  /// Fixed total order: all generator atoms precede all Integral atoms;
  /// generators compare by (family, index, x_order, y_order); Integrals by
  /// (depth, body). This is the atom order every canonical form uses.
  static int cmp(const Atom& a, const Atom& b);

 private:
  Atom() = default;

  Family family_ = Family::a;
  int index_ = 0;
  int x_order_ = 0;
  int y_order_ = 0;
  std::shared_ptr<const DiffPoly> body_;
  int depth_ = 0;
};

/// coeff * e^eps * product of atoms; atoms kept sorted under Atom::cmp,
/// with repetition for powers (a1^2 is stored as two a1 atoms).
struct Monomial {
  Rational coeff;
  int eps = 0;
  std::vector<Atom> atoms;

  bool has_atoms() const { return !atoms.empty(); }

  /// Term order: descending eps, then atoms lexicographic ascending
  /// (shorter list first on equal prefix). Coefficients do not participate.
  static int key_cmp(const Monomial& a, const Monomial& b);
};

/// Canonical sum of monomials: unique (eps, atoms) keys, sorted under
/// Monomial::key_cmp, no zero coefficients. Empty list is zero.
/// Immutable in spirit: every operation returns a fresh normalized value.
class DiffPoly {
 public:
  DiffPoly() = default;
  DiffPoly(long long c) { *this = constant(Rational(c)); }  // NOLINT
  explicit DiffPoly(Monomial m);

  static DiffPoly zero() { return DiffPoly(); }
  static DiffPoly one() { return constant(Rational(1)); }
  static DiffPoly constant(const Rational& c);
  static DiffPoly generator(Family f, int index, int x_order = 0,
                            int y_order = 0);
  static DiffPoly normalized(std::vector<Monomial> terms);

  const std::vector<Monomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool has_atoms() const;

  /// Total order extending the term order; used to sort Integral bodies.
  static int cmp(const DiffPoly& a, const DiffPoly& b);

  friend bool operator==(const DiffPoly& a, const DiffPoly& b) {
    return cmp(a, b) == 0;
  }

  DiffPoly operator-() const;
  friend DiffPoly operator+(const DiffPoly& a, const DiffPoly& b);
  friend DiffPoly operator-(const DiffPoly& a, const DiffPoly& b);
  friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);

  /// Multiply by c * e^eps_shift.
  DiffPoly scaled(const Rational& c, int eps_shift = 0) const;

  /// Keep only monomials with the given epsilon exponent.
  DiffPoly eps_part(int eps) const;

 private:
  std::vector<Monomial> terms_;
};

/// n-th derivative with respect to x or y. Leibniz over atoms; d/dx unwraps
/// one Dxi level; d/dy distributes into Dxi bodies; omega/u generators are
/// x-only and differentiate to zero under y.
DiffPoly deriv(const DiffPoly& p, Var var, unsigned n = 1);

/// Formal antiderivative in x, monomial by monomial. Scalars and epsilon
/// factors are pulled out. A single-atom monomial with x_order >= 1 has its
/// order lowered; a lone Dxi atom gains one nesting level; everything else
/// is wrapped opaquely as Dxi^1(monomial). No product-rule inversion is
/// attempted. Satisfies deriv(integrate_x(p), x) == p, with integration
/// constants fixed to zero.
DiffPoly integrate_x(const DiffPoly& p);

/// Variational derivative sum_k (-1)^k d_x^k (dp / d gen^(k)). Requires a
/// local x-polynomial: no Integral atoms, no y-derivatives (throws
/// Errc::non_local_input otherwise). Zero for every generator exactly when
/// p is a total x-derivative.
DiffPoly euler_op(const DiffPoly& p, GenId gen);

/// Replace every occurrence of gen (at any derivative order, also inside
/// Integral bodies) by the matching derivative of value. Throws
/// Errc::self_reference if value contains gen.
DiffPoly substitute(const DiffPoly& p, GenId gen, const DiffPoly& value);

/// True if gen occurs anywhere in p, including inside Integral bodies.
bool contains_generator(const DiffPoly& p, GenId gen);

/// All generators occurring in p (including inside Integral bodies),
/// in (family, index) order.
std::vector<GenId> generators_in(const DiffPoly& p);

/// Largest x_order carried by gen in p; -1 if absent. Local atoms only.
int max_x_order(const DiffPoly& p, GenId gen);

}  // namespace moyal
