#pragma once

#include <vector>

#include "moyal/psymbol.hpp"

namespace moyal {

/// s = 1 + w_1 p^-1 + ... + w_depth p^-depth, tail tracked to p^-depth
/// (floor -depth). Unit coefficient at p^0, no positive exponents.
struct DressingOperator {
  PSymbol body;
  int depth;
};

DressingOperator dressing_operator(int depth);

/// 1 + u_1 p^-1 + ... + u_depth p^-depth with the u_m as formal generators.
PSymbol formal_inverse(int depth);

/// u_m solved recursively (m = 1..depth) from the p^-m coefficients of
/// s * s^-1 = 1; the recursion is triangular, u_m involves only w_1..w_m
/// and their x-derivatives up to order m-1. Index 0 holds u_1.
std::vector<DiffPoly> u_solutions(const DressingOperator& s);

/// The solved inverse: 1 + sum u_m(w) p^-m, floor -depth. Verified to
/// satisfy s * invert(s) == 1 down to the floor.
PSymbol invert(const DressingOperator& s);

/// Substitute the solved u_m into an expression written with formal u's.
DiffPoly resolve_u(const DiffPoly& p, const std::vector<DiffPoly>& u);
PSymbol resolve_u(const PSymbol& f, const std::vector<DiffPoly>& u);

/// s * p^k * s^-1 with the formal inverse, exact to `floor`; coefficients
/// stay written in w's and u's. Requires depth >= k - floor
/// (Errc::insufficient_depth).
PSymbol conjugate(const DressingOperator& s, int k, int floor);

struct DressingReportRow {
  int exponent;
  DiffPoly lhs;  // coefficient of (s * p^k * s^-1)_{>=0}, u's resolved
  DiffPoly rhs;  // coefficient of (L^*k)_{>=0} with a_m extracted from s
  DiffPoly residual;
};

struct DressingReport {
  int k = 0;
  int depth = 0;
  bool ok = false;
  PSymbol lax;  // p + sum a_m(w) p^-m as defined by s * p * s^-1
  std::vector<DressingReportRow> rows;
};

/// Checks that the non-negative projection of s * p^k * s^-1 equals that of
/// L^*k, all in the w's after resolving u's, where L is read off
/// s * p * s^-1. Requires depth >= k + 2.
DressingReport dressing_consistency(const DressingOperator& s, int k);

}  // namespace moyal
