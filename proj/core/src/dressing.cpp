#include "moyal/dressing.hpp"

#include <cassert>
#include <stdexcept>

#include "moyal/error.hpp"

namespace moyal {

DressingOperator dressing_operator(int depth) {
  assert(depth >= 1);
  PSymbol s = PSymbol::one();
  for (int m = 1; m <= depth; ++m)
    s.set_coeff(-m, DiffPoly::generator(Family::w, m));
  s.set_floor(-depth);
  return {std::move(s), depth};
}

PSymbol formal_inverse(int depth) {
  PSymbol inv = PSymbol::one();
  for (int m = 1; m <= depth; ++m)
    inv.set_coeff(-m, DiffPoly::generator(Family::u, m));
  inv.set_floor(-depth);
  return inv;
}

std::vector<DiffPoly> u_solutions(const DressingOperator& s) {
  std::vector<DiffPoly> u;
  u.reserve(static_cast<std::size_t>(s.depth));
  PSymbol inv = PSymbol::one();  // filled in level by level
  for (int m = 1; m <= s.depth; ++m) {
    PSymbol prod = star_mul(s.body, inv);
    u.push_back(-prod.coeff(-m));
    inv.set_coeff(-m, u.back());
  }
  // The recursion is triangular, so this cannot fail; witness it anyway.
  PSymbol check = star_mul(s.body, inv);
  bool ok = check.coeff(0) == DiffPoly::one();
  for (int m = 1; m <= s.depth; ++m) ok = ok && check.coeff(-m).is_zero();
  if (!ok) throw std::logic_error("u_solutions: inverse recursion failed");
  return u;
}

PSymbol invert(const DressingOperator& s) {
  std::vector<DiffPoly> u = u_solutions(s);
  PSymbol inv = PSymbol::one();
  for (int m = 1; m <= s.depth; ++m) inv.set_coeff(-m, u[m - 1]);
  inv.set_floor(-s.depth);
  return inv;
}

DiffPoly resolve_u(const DiffPoly& p, const std::vector<DiffPoly>& u) {
  DiffPoly out = p;
  for (std::size_t m = 0; m < u.size(); ++m)
    out = substitute(out, GenId{Family::u, static_cast<int>(m) + 1}, u[m]);
  return out;
}

PSymbol resolve_u(const PSymbol& f, const std::vector<DiffPoly>& u) {
  PSymbol out;
  out.set_floor(f.floor());
  for (const auto& [e, c] : f.coeffs()) out.set_coeff(e, resolve_u(c, u));
  return out;
}

PSymbol conjugate(const DressingOperator& s, int k, int floor) {
  if (s.depth < k - floor)
    throw Error(Errc::insufficient_depth,
                "conjugate: depth " + std::to_string(s.depth) +
                    " cannot reach p^" + std::to_string(floor) +
                    " for k = " + std::to_string(k));
  PSymbol sp = star_mul(s.body, PSymbol::p_power(k));
  PSymbol out = star_mul(sp, formal_inverse(s.depth), floor);
  return out.truncated_to(floor);
}

DressingReport dressing_consistency(const DressingOperator& s, int k) {
  if (s.depth < k + 2)
    throw Error(Errc::insufficient_depth,
                "dressing_consistency: need depth >= k + 2");
  DressingReport report;
  report.k = k;
  report.depth = s.depth;

  const std::vector<DiffPoly> u = u_solutions(s);

  // a_m from s * p * s^-1; one tail level is spent by the conjugation.
  const int lax_depth = s.depth - 1;
  PSymbol conj1 = resolve_u(conjugate(s, 1, -lax_depth), u);
  if (!(conj1.coeff(1) == DiffPoly::one()) || !conj1.coeff(0).is_zero())
    throw std::logic_error("dressing_consistency: conjugation lost Lax shape");
  PSymbol L = PSymbol::p_power(1);
  for (int m = 1; m <= lax_depth; ++m) L.set_coeff(-m, conj1.coeff(-m));
  L.set_floor(-lax_depth);
  report.lax = L;

  PSymbol lhs = project(resolve_u(conjugate(s, k, 0), u), 0);
  PSymbol rhs = project(star_pow(L, static_cast<unsigned>(k), 0), 0);

  report.ok = true;
  for (int e = k; e >= 0; --e) {
    DressingReportRow row;
    row.exponent = e;
    row.lhs = lhs.coeff(e);
    row.rhs = rhs.coeff(e);
    row.residual = row.lhs - row.rhs;
    if (!row.residual.is_zero()) report.ok = false;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace moyal
