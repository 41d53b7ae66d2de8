#include "moyal/dressing.hpp"

#include "doctest.h"
#include "moyal/error.hpp"
#include "moyal/text.hpp"

using namespace moyal;

TEST_CASE("inverse tail solves triangularly") {
  DressingOperator s = dressing_operator(5);
  std::vector<DiffPoly> u = u_solutions(s);
  CHECK(u[0] == parse_poly("-w1"));
  CHECK(u[1] == parse_poly("-w2 + w1*w1"));
  // the printed third line is garbled; the recursion gives the classical
  // value, epsilon corrections cancel
  CHECK(u[2] == parse_poly("-w3 + 2*w1*w2 - w1*w1*w1"));

  for (std::size_t m = 0; m < u.size(); ++m) {
    for (GenId g : generators_in(u[m])) {
      CHECK(g.family == Family::w);
      CHECK(g.index <= static_cast<int>(m) + 1);
      CHECK(max_x_order(u[m], g) <= static_cast<int>(m));
    }
  }
}

TEST_CASE("invert is a two-sided star inverse on the tracked window") {
  DressingOperator s = dressing_operator(5);
  PSymbol inv = invert(s);
  PSymbol right = star_mul(s.body, inv);
  PSymbol left = star_mul(inv, s.body);
  CHECK(right.coeff(0) == DiffPoly::one());
  CHECK(left.coeff(0) == DiffPoly::one());
  for (int m = 1; m <= 5; ++m) {
    CHECK(right.coeff(-m).is_zero());
    CHECK(left.coeff(-m).is_zero());
  }
}

TEST_CASE("conjugation by p: formal and resolved coefficients") {
  DressingOperator s = dressing_operator(4);
  std::vector<DiffPoly> u = u_solutions(s);
  PSymbol conj = conjugate(s, 1, -2);
  CHECK(conj.coeff(0) == parse_poly("w1 + u1"));
  PSymbol resolved = resolve_u(conj, u);
  CHECK(resolved.coeff(1) == DiffPoly::one());
  CHECK(resolved.coeff(0).is_zero());
  CHECK(resolved.coeff(-1) == parse_poly("-2*e*w1^(1)"));
  CHECK(resolved.coeff(-2) == parse_poly("-2*e*w2^(1) + 2*e*w1*w1^(1)"));
}

TEST_CASE("conjugation by p^3 keeps the printed formal p-coefficient") {
  DressingOperator s = dressing_operator(4);
  PSymbol conj = conjugate(s, 3, 1);
  CHECK(conj.coeff(1) ==
        parse_poly("u2 + w2 + w1*u1 + 3*e*u1^(1) - 3*e*w1^(1)"));
  CHECK_THROWS_AS(conjugate(s, 3, -2), Error);  // depth 4 < k - floor
}

TEST_CASE("conjugation is an algebra map after resolving") {
  DressingOperator s = dressing_operator(8);
  std::vector<DiffPoly> u = u_solutions(s);
  PSymbol c3 = resolve_u(conjugate(s, 3, -1), u);
  PSymbol c1 = resolve_u(conjugate(s, 1, -4), u);
  PSymbol c2 = resolve_u(conjugate(s, 2, -4), u);
  PSymbol prod = star_mul(c1, c2);
  CHECK(c3.agrees_with(prod, -1));
}

TEST_CASE("a_m extraction agrees between the two inverse routes") {
  DressingOperator s = dressing_operator(6);
  std::vector<DiffPoly> u = u_solutions(s);
  PSymbol via_formal = resolve_u(conjugate(s, 1, -4), u);
  PSymbol via_solved =
      star_mul(star_mul(s.body, PSymbol::p_power(1)), invert(s), -4);
  CHECK(via_formal.agrees_with(via_solved, -4));
}

TEST_CASE("dressing consistency for k=3 and k=5") {
  DressingOperator s = dressing_operator(7);
  DressingReport r3 = dressing_consistency(s, 3);
  CHECK(r3.ok);
  // constant term of the projection is three times the extracted a2
  DiffPoly a2 = r3.lax.coeff(-2);
  for (const auto& row : r3.rows)
    if (row.exponent == 0) CHECK(row.lhs == a2.scaled(Rational(3)));

  DressingReport r5 = dressing_consistency(s, 5);
  CHECK(r5.ok);
  DiffPoly a1 = r5.lax.coeff(-1);
  DiffPoly a3 = r5.lax.coeff(-3);
  DiffPoly expected_p = a3.scaled(Rational(5)) + (a1 * a1).scaled(Rational(10)) +
                        deriv(a1, Var::x, 2).scaled(Rational(10), 2);
  for (const auto& row : r5.rows)
    if (row.exponent == 1) CHECK(row.lhs == expected_p);

  CHECK_THROWS_AS(dressing_consistency(s, 7), Error);  // depth < k + 2
}

TEST_CASE("trivial dressing operator conjugates to bare powers") {
  PSymbol one = PSymbol::one();
  one.set_floor(-6);
  DressingOperator s{one, 6};
  CHECK(u_solutions(s)[3].is_zero());
  PSymbol conj = resolve_u(conjugate(s, 3, 0), u_solutions(s));
  CHECK(conj.same_terms(PSymbol::p_power(3)));
  DressingReport r = dressing_consistency(s, 3);
  CHECK(r.ok);
}
