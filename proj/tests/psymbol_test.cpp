#include "moyal/psymbol.hpp"

#include "doctest.h"
#include "moyal/error.hpp"
#include "moyal/hierarchy.hpp"
#include "moyal/text.hpp"
#include "star_oracle.hpp"
#include "test_util.hpp"

using namespace moyal;
using moyal::testing::Rng;

namespace {
const GenId kA1{Family::a, 1};
const GenId kA2{Family::a, 2};

PSymbol mono_symbol(GenId g, int exponent) {
  return PSymbol::from_poly(DiffPoly::generator(g.family, g.index), exponent);
}
}  // namespace

TEST_CASE("star product of p^2 with a generator, both orders") {
  PSymbol a = mono_symbol(kA1, 0);
  PSymbol p2 = PSymbol::p_power(2);
  CHECK(render(star_mul(p2, a)) == "(a1)*p^2 + (2*e*a1^(1))*p + e^2*a1^(2)");
  CHECK(render(star_mul(a, p2)) == "(a1)*p^2 - (2*e*a1^(1))*p + e^2*a1^(2)");
  CHECK(star_mul(p2, a).exact());
}

TEST_CASE("star identity element") {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    PSymbol f = testing::random_symbol(rng, -3, 3, trial % 2 == 0);
    CHECK(star_mul(f, PSymbol::one()) == f);
    CHECK(star_mul(PSymbol::one(), f) == f);
  }
}

TEST_CASE("star on monomial symbols matches the closed-form oracle") {
  for (int i = -2; i <= 2; ++i) {
    for (int m = -2; m <= 2; ++m) {
      const int floor = i + m - 5;
      PSymbol engine =
          star_mul(mono_symbol(kA2, i), mono_symbol(kA1, m), floor);
      PSymbol oracle = testing::star_monomial_oracle(kA2, i, kA1, m, floor);
      CHECK(engine == oracle);
    }
  }
}

TEST_CASE("star grading: order s carries epsilon^s") {
  for (int i = -2; i <= 2; ++i) {
    for (int m = -2; m <= 2; ++m) {
      PSymbol f = star_mul(mono_symbol(kA2, i), mono_symbol(kA1, m), i + m - 6);
      for (const auto& [e, c] : f.coeffs()) {
        const int s = i + m - e;
        for (const auto& mono : c.terms()) CHECK(mono.eps == s);
      }
    }
  }
}

TEST_CASE("exact products terminate or demand a window") {
  CHECK(render(star_mul(PSymbol::p_power(1), PSymbol::p_power(-1))) == "1");
  CHECK(star_mul(PSymbol::p_power(1), PSymbol::p_power(-1)).exact());
  PSymbol tail = mono_symbol(kA1, -1);
  PSymbol gen = mono_symbol(kA2, 0);
  CHECK_THROWS_AS(star_mul(tail, gen), Error);
  try {
    star_mul(tail, gen);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::infinite_tail);
  }
  CHECK(star_mul(tail, gen, -4).floor() == std::optional<int>(-4));
}

TEST_CASE("floor propagation through truncated factors") {
  PSymbol L = lax_symbol(4);
  PSymbol prod = star_mul(L, L);
  CHECK(prod.floor() == std::optional<int>(-3));  // -4 + deg 1
  CHECK_THROWS_AS(prod.coeff(-4), Error);
  CHECK(prod.coeff(-3) == parse_poly("2*a4 + 2*a1*a2"));  // window edge is exact
}

TEST_CASE("lax star powers reproduce the pinned expansions") {
  PSymbol L = lax_symbol(6);
  CHECK(star_pow(L, 2, -1).same_terms(
      parse_symbol("p^2 + 2*a1 + (2*a2)*p^-1")));
  CHECK(star_pow(L, 3, -1).same_terms(parse_symbol(
      "p^3 + (3*a1)*p + 3*a2 + (3*a3 + 3*a1*a1 + e^2*a1^(2))*p^-1")));
  CHECK(star_pow(L, 3, 0).same_terms(parse_symbol("p^3 + (3*a1)*p + 3*a2")));
}

TEST_CASE("star_pow windows and errors") {
  PSymbol L = lax_symbol(2);
  CHECK_THROWS_AS(star_pow(L, 3, -2), Error);  // needs a3, a4 tracked
  try {
    star_pow(L, 3, -2);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::insufficient_depth);
  }
  CHECK(star_pow(lax_symbol(4), 3, -2).floor() == std::optional<int>(-2));
  CHECK(star_pow(PSymbol::p_power(1), 4, 0).same_terms(PSymbol::p_power(4)));
}

TEST_CASE("projection keeps a window as an exact symbol") {
  PSymbol L = lax_symbol(6);
  PSymbol l3 = star_pow(L, 3, -1);
  CHECK(render(project(l3, 1)) == "p^3 + (3*a1)*p");
  CHECK(project(l3, 1).exact());
  CHECK(render(project(parse_symbol("p + a1*p^-1"), 0)) == "p");
  CHECK_THROWS_AS(project(l3, -2), Error);  // below the exactness floor
}

TEST_CASE("residue reads p^-1 and guards its floor") {
  PSymbol L = lax_symbol(6);
  CHECK(residue(star_pow(L, 2, -1)) == parse_poly("2*a2"));
  CHECK(residue(star_pow(L, 3, -1)) ==
        parse_poly("3*a3 + 3*a1*a1 + e^2*a1^(2)"));
  CHECK(residue(PSymbol::p_power(3)).is_zero());
  CHECK_THROWS_AS(residue(star_pow(L, 3, 0)), Error);
}

TEST_CASE("commutator matches its closed form and is antisymmetric") {
  PSymbol a = mono_symbol(kA1, 0);
  CHECK(render(commutator(PSymbol::p_power(1), a)) == "2*e*a1^(1)");
  for (int i = -3; i <= 3; ++i) {
    const int floor = i - 7;
    PSymbol engine = commutator(mono_symbol(kA2, i), a, floor);
    PSymbol oracle = testing::commutator_monomial_oracle(kA2, i, kA1, floor);
    CHECK(engine == oracle);
  }
  Rng rng(5150);
  for (int trial = 0; trial < 20; ++trial) {
    PSymbol f = testing::random_symbol(rng);
    CHECK(commutator(f, f, -6).is_zero());
    PSymbol g = testing::random_symbol(rng);
    CHECK(commutator(f, g, -6) == -commutator(g, f, -6));
    PSymbol h = testing::random_symbol(rng);
    CHECK(commutator(f + g, h, -6) ==
          commutator(f, h, -6) + commutator(g, h, -6));
  }
}

TEST_CASE("commutator equals the difference of the two star products") {
  Rng rng(31337);
  for (int trial = 0; trial < 20; ++trial) {
    PSymbol f = testing::random_symbol(rng);
    PSymbol g = testing::random_symbol(rng);
    PSymbol lhs = commutator(f, g, -5);
    PSymbol diff = star_mul(f, g, -5) - star_mul(g, f, -5);
    CHECK(lhs.agrees_with(diff, *diff.floor()));
  }
}

TEST_CASE("star product is associative above the propagated floor") {
  Rng rng(271828);
  for (int trial = 0; trial < 30; ++trial) {
    PSymbol f = testing::random_symbol(rng);
    PSymbol g = testing::random_symbol(rng);
    PSymbol h = testing::random_symbol(rng);
    PSymbol lhs = star_mul(star_mul(f, g), h);
    PSymbol rhs = star_mul(f, star_mul(g, h));
    const int from = std::max(*lhs.floor(), *rhs.floor());
    CHECK(lhs.agrees_with(rhs, from));
  }
}

TEST_CASE("Jacobi identity on exact non-negative symbols") {
  Rng rng(161803);
  for (int trial = 0; trial < 15; ++trial) {
    PSymbol f = testing::random_symbol(rng, 0, 2, false);
    PSymbol g = testing::random_symbol(rng, 0, 2, false);
    PSymbol h = testing::random_symbol(rng, 0, 2, false);
    PSymbol sum = commutator(f, commutator(g, h)) +
                  commutator(g, commutator(h, f)) +
                  commutator(h, commutator(f, g));
    CHECK(sum.is_zero());
  }
}

TEST_CASE("classical limit of the scaled commutator is the Poisson bracket") {
  CHECK(render(poisson_bracket(PSymbol::p_power(1), mono_symbol(kA1, 0))) ==
        "a1^(1)");
  Rng rng(123);
  for (int trial = 0; trial < 40; ++trial) {
    PSymbol f = testing::random_symbol(rng);
    PSymbol g = testing::random_symbol(rng);
    CHECK(poisson_bracket(f, f).is_zero());
    PSymbol pb = poisson_bracket(f, g);
    PSymbol scaled = commutator(f, g).scaled(Rational(BigInt(1), BigInt(2)), -1)
                         .eps_window(0, 0);
    const int from = *pb.floor();
    CHECK(scaled.agrees_with(pb, from));
  }
}

TEST_CASE("coefficients below the floor are an error, never zero") {
  PSymbol L = lax_symbol(3);
  CHECK_THROWS_AS(L.coeff(-4), Error);
  CHECK(L.coeff(-3) == parse_poly("a3"));
  CHECK(L.coeff(0).is_zero());  // at the tracked window, genuinely zero
}
