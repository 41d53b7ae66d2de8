#pragma once

#include "moyal/psymbol.hpp"

namespace moyal::testing {

/// Independent closed form for b p^i * a p^m, expanded directly from the
/// exponential product rule:
///   sum_{s,k} e^s (-1)^k C(i, s-k) C(m, k) b^(k) a^(s-k) p^{i+m-s}.
/// Monomials are assembled by hand; none of the star_mul machinery is used.
inline PSymbol star_monomial_oracle(GenId b, int i, GenId a, int m, int floor) {
  PSymbol out;
  out.set_floor(floor);
  for (int s = 0; i + m - s >= floor; ++s) {
    DiffPoly coeff;
    for (int k = 0; k <= s; ++k) {
      Rational c = binomial(i, static_cast<unsigned>(s - k)) *
                   binomial(m, static_cast<unsigned>(k));
      if (k % 2 != 0) c = -c;
      if (c.is_zero()) continue;
      Monomial mono;
      mono.coeff = c;
      mono.eps = s;
      mono.atoms.push_back(Atom::generator(b, k));
      mono.atoms.push_back(Atom::generator(a, s - k));
      std::sort(mono.atoms.begin(), mono.atoms.end(),
                [](const Atom& x, const Atom& y) { return Atom::cmp(x, y) < 0; });
      coeff = coeff + DiffPoly(std::move(mono));
    }
    if (!coeff.is_zero()) out.set_coeff(i + m - s, std::move(coeff));
  }
  return out;
}

/// Closed form for the commutator [b p^i, a]:
///   2 sum_k C(i, 2k+1) e^{2k+1} a^(2k+1) b p^{i-2k-1}.
inline PSymbol commutator_monomial_oracle(GenId b, int i, GenId a, int floor) {
  PSymbol out;
  out.set_floor(floor);
  for (int k = 0; i - 2 * k - 1 >= floor; ++k) {
    Rational c = binomial(i, static_cast<unsigned>(2 * k + 1)) * Rational(2);
    if (c.is_zero()) continue;
    Monomial mono;
    mono.coeff = c;
    mono.eps = 2 * k + 1;
    mono.atoms.push_back(Atom::generator(b, 0));
    mono.atoms.push_back(Atom::generator(a, 2 * k + 1));
    std::sort(mono.atoms.begin(), mono.atoms.end(),
              [](const Atom& x, const Atom& y) { return Atom::cmp(x, y) < 0; });
    out.set_coeff(i - 2 * k - 1, DiffPoly(std::move(mono)));
  }
  return out;
}

}  // namespace moyal::testing
