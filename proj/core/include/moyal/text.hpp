#pragma once

#include <string>

#include "moyal/diffpoly.hpp"
#include "moyal/psymbol.hpp"

namespace moyal {

/// Canonical text forms. Coefficients render as reduced fractions, epsilon
/// as `e^k` (`e` for k=1, omitted for k=0), generators as `a3^(2)` for two
/// x-derivatives and `a3^(2;1)` with a y-derivative, antiderivatives as
/// `Dxi^d(...)`. Symbols render in descending p-exponent with polynomial
/// coefficients parenthesized, e.g. `p^3 + (3*a1)*p + 3*a2`.
std::string render(const Rational& r);
std::string render(const Monomial& m);
std::string render(const DiffPoly& p);
std::string render(const PSymbol& f);
std::string render(GenId gen);

/// Parse the expression grammar shared by renders and the CLI. `*` is the
/// commutative coefficient product (star products are built by explicit
/// calls, never by the grammar). Throws ParseError with a byte offset and
/// the expected-token set.
PSymbol parse_symbol(const std::string& text);

/// As parse_symbol but requires a p-free expression.
DiffPoly parse_poly(const std::string& text);

GenId parse_gen(const std::string& text);

}  // namespace moyal
