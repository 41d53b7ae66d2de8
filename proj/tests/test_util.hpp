#pragma once

#include <random>

#include "moyal/diffpoly.hpp"
#include "moyal/psymbol.hpp"

namespace moyal::testing {

using Rng = std::mt19937;

inline Rational random_coeff(Rng& rng) {
  std::uniform_int_distribution<int> num(-5, 5);
  int n = num(rng);
  if (n == 0) n = 1;
  return Rational(n);
}

inline Atom random_atom(Rng& rng, int max_index = 3, int max_order = 2) {
  std::uniform_int_distribution<int> idx(1, max_index);
  std::uniform_int_distribution<int> ord(0, max_order);
  return Atom::generator(Family::a, idx(rng), ord(rng), 0);
}

inline DiffPoly random_poly(Rng& rng, int max_terms = 3, int max_atoms = 2) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> natoms(0, max_atoms);
  std::vector<Monomial> terms;
  const int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    Monomial m;
    m.coeff = random_coeff(rng);
    m.eps = 0;
    const int k = natoms(rng);
    for (int i = 0; i < k; ++i) m.atoms.push_back(random_atom(rng));
    std::sort(m.atoms.begin(), m.atoms.end(),
              [](const Atom& a, const Atom& b) { return Atom::cmp(a, b) < 0; });
    terms.push_back(std::move(m));
  }
  return DiffPoly::normalized(std::move(terms));
}

/// Random symbol with exponents in [lo, hi] and floor lo; <= max_gens
/// distinct generators overall is kept by drawing small indices.
inline PSymbol random_symbol(Rng& rng, int lo = -3, int hi = 3,
                             bool truncated = true) {
  PSymbol f;
  std::uniform_int_distribution<int> coin(0, 1);
  for (int e = lo; e <= hi; ++e) {
    if (coin(rng)) continue;
    DiffPoly c = random_poly(rng);
    if (!c.is_zero()) f.set_coeff(e, std::move(c));
  }
  if (f.is_zero()) f.set_coeff(hi, DiffPoly::one());
  if (truncated) f.set_floor(lo);
  return f;
}

}  // namespace moyal::testing
