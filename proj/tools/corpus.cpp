#include "corpus.hpp"

#include "moyal/dressing.hpp"
#include "moyal/error.hpp"
#include "moyal/hierarchy.hpp"
#include "moyal/text.hpp"
#include "semantic_eval.hpp"

namespace moyal::corpus {

namespace {

PSymbol gen_symbol(const char* g, int exponent) {
  GenId id = parse_gen(g);
  return PSymbol::from_poly(DiffPoly::generator(id.family, id.index), exponent);
}

const FlowResult& y3() {
  static const FlowResult fr = flow_equations(lax_symbol(6), 3, 0, 4, "y");
  return fr;
}
const FlowResult& y3_bkp() {
  static const FlowResult fr = impose_bkp(y3());
  return fr;
}
const FlowResult& y2() {
  static const FlowResult fr = flow_equations(lax_symbol(6), 2, 0, 4, "y");
  return fr;
}
const FlowResult& t5() {
  static const FlowResult fr = flow_equations(lax_symbol(6), 5, 0, 1, "t");
  return fr;
}
const FlowResult& t5_bkp() {
  static const FlowResult fr =
      impose_bkp(flow_equations(lax_symbol(6), 5, 0, 2, "t"));
  return fr;
}
const FlowResult& y3_mod() {
  static const FlowResult fr = flow_equations(lax_symbol(5), 3, 1, 3, "y");
  return fr;
}
const FlowResult& t5_mod() {
  static const FlowResult fr = flow_equations(lax_symbol(5), 5, 1, 1, "t");
  return fr;
}
const ScalarDerivation& pipe35() {
  static const ScalarDerivation d = derive_scalar_equation(3, 5, 0);
  return d;
}
const ScalarDerivation& pipe25() {
  static const ScalarDerivation d = derive_scalar_equation(2, 5, 0);
  return d;
}
const ScalarDerivation& pipe35mod() {
  static const ScalarDerivation d = derive_scalar_equation(3, 5, 1);
  return d;
}

DiffPoly flow_rhs(const FlowResult& fr, int index) {
  for (const auto& eq : fr.equations)
    if (eq.target.index == index) return eq.rhs;
  return DiffPoly::zero();
}

std::string flow_line(const FlowResult& fr, int index) {
  return render(flow_rhs(fr, index));
}

std::string eliminated_value(const ScalarDerivation& d, int index) {
  for (const auto& [g, sol] : d.eliminated)
    if (g == GenId{Family::a, index}) return render(sol);
  return "<missing>";
}

/// Monomials carrying any x-derivative of a2 vanish under the constant-level
/// constraint a2^(1) = 0 of the >=1-projected flows.
DiffPoly drop_a2_derivatives(const DiffPoly& p) {
  std::vector<Monomial> kept;
  for (const auto& m : p.terms()) {
    bool killed = false;
    for (const auto& a : m.atoms)
      if (!a.is_integral() && a.gen_id() == GenId{Family::a, 2} &&
          a.x_order() >= 1)
        killed = true;
    if (!killed) kept.push_back(m);
  }
  return DiffPoly::normalized(std::move(kept));
}

/// Difference between the resolved non-negative projection of s p^k s^-1
/// and the same projection written through the extracted Lax coefficients.
std::string dressing_projection_gap(int k, int depth) {
  DressingOperator s = dressing_operator(depth);
  std::vector<DiffPoly> u = u_solutions(s);
  PSymbol lhs = project(resolve_u(conjugate(s, k, 0), u), 0);
  PSymbol conj1 = resolve_u(conjugate(s, 1, -(depth - 1)), u);
  auto a = [&](int m) { return conj1.coeff(-m); };
  PSymbol expected = PSymbol::p_power(k);
  if (k == 3) {
    expected.set_coeff(1, a(1).scaled(3));
    expected.set_coeff(0, a(2).scaled(3));
  } else {
    expected.set_coeff(3, a(1).scaled(5));
    expected.set_coeff(2, a(2).scaled(5));
    expected.set_coeff(1, a(3).scaled(5) + (a(1) * a(1)).scaled(10) +
                               deriv(a(1), Var::x, 2).scaled(10, 2));
    expected.set_coeff(0, a(4).scaled(5) + (a(1) * a(2)).scaled(20) +
                               deriv(a(2), Var::x, 2).scaled(10, 2));
  }
  return render(lhs - expected);
}

std::vector<Entry> build() {
  std::vector<Entry> rows;
  auto add = [&rows](Entry e) { rows.push_back(std::move(e)); };

  // ---- star product closed forms -------------------------------------
  add({"eq4-l1", "Eq. (4) line 1, p^2 * a",
       [] { return render(star_mul(PSymbol::p_power(2), gen_symbol("a1", 0))); },
       "(a1)*p^2 + (2*e*a1^(1))*p + e^2*a1^(2)",
       "a1*p^2 + 2*e*a1^(1)*p + e^2*a1^(2)", Compare::exact, Status::match,
       ""});
  add({"eq4-l2", "Eq. (4) line 2, a * p^2",
       [] { return render(star_mul(gen_symbol("a1", 0), PSymbol::p_power(2))); },
       "(a1)*p^2 - (2*e*a1^(1))*p + e^2*a1^(2)",
       "a1*p^2 - 2*e*a1^(1)*p + e^2*a1^(2)", Compare::exact, Status::match,
       ""});
  add({"eq4-l6", "Eq. (4) last line, b p^i * a p^m at i=2, m=-1",
       [] {
         return render(
             star_mul(gen_symbol("a2", 2), gen_symbol("a1", -1), -3));
       },
       "(a1*a2)*p + e*a1*a2^(1) + 2*e*a1^(1)*a2 + (e^2*a1*a2^(2) + "
       "2*e^2*a1^(1)*a2^(1) + e^2*a1^(2)*a2)*p^-1 + (e^3*a1*a2^(3) + "
       "2*e^3*a1^(1)*a2^(2) + e^3*a1^(2)*a2^(1))*p^-2 + (e^4*a1*a2^(4) + "
       "2*e^4*a1^(1)*a2^(3) + e^4*a1^(2)*a2^(2))*p^-3",
       "", Compare::exact, Status::confirmed_typo,
       "the printed double sum carries spurious factors (1/s)(s-k)k; the "
       "exponential rule gives e^s (-1)^k C(i,s-k) C(m,k) b^(k) a^(s-k) "
       "p^(i+m-s), cross-checked against the brute-force oracle in the "
       "acceptance suite"});
  add({"eq5-antisym", "Eq. (5), commutator of a symbol with itself",
       [] {
         PSymbol f = star_mul(gen_symbol("a1", 1), gen_symbol("a2", 0), -4);
         return render(commutator(f, f, -4));
       },
       "0", "0", Compare::exact, Status::match, ""});
  add({"eq6-i1", "Eq. (6) at i = 1, [p, a]",
       [] { return render(commutator(PSymbol::p_power(1), gen_symbol("a1", 0))); },
       "2*e*a1^(1)", "2*e*a1^(1)", Compare::exact, Status::match,
       "line 1 of the print spells the deformation parameter as a "
       "(\"a^{2k+1}\"); read as e^{2k+1} by comparison with line 2"});
  add({"eq6-i2", "Eq. (6) line 2 at i = 2, [b p^2, a]",
       [] {
         return render(
             commutator(gen_symbol("a2", 2), gen_symbol("a1", 0), -2));
       },
       "(4*e*a1^(1)*a2)*p", "4*e*a1^(1)*a2*p", Compare::exact, Status::match,
       ""});

  // ---- binomial identities -------------------------------------------
  add({"eq7-odd", "Eq. (7), odd branch at i=1, k=0",
       [] { return binomial(-2, 1).str(); }, "-2", "-2", Compare::exact,
       Status::match, ""});
  add({"eq7-even", "Eq. (7), even branch at i=2, k=1",
       [] { return binomial(-3, 2).str(); }, "6", "6", Compare::exact,
       Status::match, ""});

  // ---- Lax star powers -------------------------------------------------
  add({"eq13-l2", "Eq. (13), L*2",
       [] { return render(star_pow(lax_symbol(6), 2, -1)); },
       "p^2 + 2*a1 + (2*a2)*p^-1", "p^2 + 2*a1 + 2*a2*p^-1", Compare::exact,
       Status::match, ""});
  add({"eq13-l3", "Eq. (13), L*3",
       [] { return render(star_pow(lax_symbol(6), 3, -1)); },
       "p^3 + (3*a1)*p + 3*a2 + (e^2*a1^(2) + 3*a1*a1 + 3*a3)*p^-1",
       "p^3 + 3*a1*p + 3*a2 + (3*a3 + 3*a1*a1 + e^2*a1^(2))*p^-1",
       Compare::exact, Status::match, ""});
  add({"eq13-l4", "Eq. (13), L*4",
       [] { return render(star_pow(lax_symbol(6), 4, -1)); },
       "p^4 + (4*a1)*p^2 + (4*a2)*p + 4*e^2*a1^(2) + 6*a1*a1 + 4*a3 + "
       "(4*e^2*a2^(2) + 12*a1*a2 + 4*a4)*p^-1",
       "p^4 + 4*a1*p^2 + 4*a2*p + 4*a3 + 6*a1*a1 + 4*e^2*a1^(2) + "
       "(4*a4 + 12*a1*a2 + 4*e^2*a2^(2))*p^-1",
       Compare::exact, Status::match, ""});
  add({"eq13-l5", "Eq. (13), L*5",
       [] { return render(star_pow(lax_symbol(6), 5, -1)); },
       "p^5 + (5*a1)*p^3 + (5*a2)*p^2 + (10*e^2*a1^(2) + 10*a1*a1 + "
       "5*a3)*p + 10*e^2*a2^(2) + 20*a1*a2 + 5*a4 + (e^4*a1^(4) + "
       "20*e^2*a1*a1^(2) + 10*e^2*a1^(1)*a1^(1) + 10*e^2*a3^(2) + "
       "10*a1*a1*a1 + 20*a1*a3 + 10*a2*a2 + 5*a5)*p^-1",
       "p^5 + 5*a1*p^3 + 5*a2*p^2 + (5*a3 + 10*a1*a1 + 10*e^2*a2^(2))*p + "
       "5*a4 + 20*a1*a2 + 10*e^2*a2^(2) + (5*a5 + 20*a1*a3 + 10*a2*a2 + "
       "10*a1*a1*a1 + e*(8*a4^(1) + 24*a1*a2^(1) + 24*a2*a1^(1)) + "
       "e^2*(10*a3^(2) + 20*a1*a1^(2) + 10*a1^(1)*a1^(1)) + 8*e^3*a2^(3) + "
       "e^4*a1^(4))*p^-1",
       Compare::exact, Status::confirmed_typo,
       "star powers of L are even in e (reversing the factors flips the "
       "sign of e and leaves L*...*L fixed), so the odd-e group printed in "
       "the p^-1 coefficient cannot occur; the p coefficient also prints "
       "a2^(2) for a1^(2), against both the derivation and the reprint in "
       "the >=1-projection display; the even-e part of p^-1 agrees"});
  add({"res-l2", "Eq. (13) line 1, Res L*2",
       [] { return render(residue(star_pow(lax_symbol(6), 2, -1))); }, "2*a2",
       "2*a2", Compare::exact, Status::match, ""});
  add({"res-l3", "Eq. (13), Res L*3",
       [] { return render(residue(star_pow(lax_symbol(6), 3, -1))); },
       "e^2*a1^(2) + 3*a1*a1 + 3*a3", "3*a3 + 3*a1*a1 + e^2*a1^(2)",
       Compare::exact, Status::match, ""});

  // ---- third flow (y), threshold 0 -------------------------------------
  add({"eq15-l1", "Eq. (15) line 1, a1_y",
       [] { return flow_line(y3(), 1); },
       "2*e^3*a1^(3) + 12*e*a1*a1^(1) + 6*e*a3^(1)",
       "6*e*a3^(1) + 12*e*a1*a1^(1) + 2*e^3*a1^(3)", Compare::exact,
       Status::match, ""});
  add({"eq15-l2", "Eq. (15) line 2, a2_y",
       [] { return flow_line(y3(), 2); },
       "2*e^3*a2^(3) + 12*e*a1*a2^(1) + 12*e*a1^(1)*a2 + 6*e*a4^(1)",
       "6*e*a4^(1) + 12*e*a1^(1)*a2 + 12*e*a1*a2^(1) + 2*e^3*a2^(3)",
       Compare::exact, Status::match, ""});
  add({"eq15-l3", "Eq. (15) line 3, a3_y",
       [] { return flow_line(y3(), 3); },
       "6*e^3*a1*a1^(3) + 6*e^3*a1^(1)*a1^(2) + 2*e^3*a3^(3) + "
       "6*e*a1*a3^(1) + 18*e*a1^(1)*a3 + 12*e*a2*a2^(1) + 6*e*a5^(1)",
       "6*e*a5^(1) + 6*e*a1*a3^(3) + 18*e*a1^(1)*a3 + 12*e*a2*a2^(1) + "
       "2*e^3*a3^(3) + 6*e^3*a1^(3)*a1 + 6*e^3*a1^(2)*a1^(1)",
       Compare::exact, Status::confirmed_typo,
       "the print has a1 a3^(3) where the derivation gives a1 a3^(1); the "
       "constrained reprint of the same line carries a3^(1)"});
  add({"eq15-l4", "Eq. (15) line 4, a4_y",
       [] { return flow_line(y3(), 4); },
       "6*e^3*a1*a2^(3) + 18*e^3*a1^(2)*a2^(1) + 24*e^3*a1^(3)*a2 + "
       "2*e^3*a4^(3) + 6*e*a1*a4^(1) + 24*e*a1^(1)*a4 + 18*e*a2^(1)*a3 + "
       "6*e*a6^(1)",
       "6*a6^(1) + 6*a1*a4^(1) + 24*a1^(1)*a4 + 18*a2^(1)*a3 + "
       "2*e^3*a4^(3) + 18*e^3*a1^(2)*a2^(1) + 24*e^3*a1^(3)*a2 + "
       "6*e^3*a1*a2^(3)",
       Compare::exact, Status::confirmed_typo,
       "the first printed group lost its overall factor of e; with it "
       "restored every term agrees"});
  add({"eq16", "Eq. (16), a3_y under the BKP constraint",
       [] { return flow_line(y3_bkp(), 3); },
       "6*e^3*a1*a1^(3) + 6*e^3*a1^(1)*a1^(2) + 2*e^3*a3^(3) + "
       "6*e*a1*a3^(1) + 18*e*a1^(1)*a3 + 6*e*a5^(1)",
       "6*e*a5^(1) + 6*e*a1*a3^(1) + 18*e*a1^(1)*a3 + 2*e^3*a3^(3) + "
       "6*e^3*a1^(3)*a1 + 6*e^3*a1^(2)*a1^(1)",
       Compare::exact, Status::match, ""});

  // ---- fifth flow (t) ---------------------------------------------------
  add({"eq17", "Eq. (17), a1_t with a2 = a4 = 0",
       [] { return flow_line(t5_bkp(), 1); },
       "2*e^5*a1^(5) + 40*e^3*a1*a1^(3) + 80*e^3*a1^(1)*a1^(2) + "
       "20*e^3*a3^(3) + 60*e*a1*a1*a1^(1) + 40*e*a1*a3^(1) + "
       "40*e*a1^(1)*a3 + 10*e*a5^(1)",
       "2*e^5*a1^(5) + 20*e^3*a3^(3) + 40*e^3*a1^(3)*a1 + "
       "80*e^3*a1^(2)*a1^(1) + 10*e*a5^(1) + 40*e*a3^(1)*a1 + "
       "40*e*a3*a1^(1) + 60*e*a1*a1*a1^(1)",
       Compare::exact, Status::match,
       "this display and its unconstrained companion disagree on the "
       "a3 a1^(1) coefficient (40 here, 30 there); the derivation "
       "confirms 40"});
  add({"eq21", "Eq. (21), a1_t unconstrained",
       [] { return flow_line(t5(), 1); },
       "2*e^5*a1^(5) + 40*e^3*a1*a1^(3) + 80*e^3*a1^(1)*a1^(2) + "
       "20*e^3*a3^(3) + 60*e*a1*a1*a1^(1) + 40*e*a1*a3^(1) + "
       "40*e*a1^(1)*a3 + 40*e*a2*a2^(1) + 10*e*a5^(1)",
       "2*e^5*a1^(5) + 20*e^3*a3^(3) + 40*e^3*a1^(3)*a1 + "
       "80*e^3*a1^(2)*a1^(1) + 10*e*a5^(1) + 40*e*a3^(1)*a1 + "
       "30*e*a3*a1^(1) + 40*e*a2*a2^(1) + 60*e*a1*a1*a1^(1)",
       Compare::exact, Status::confirmed_typo,
       "prints 30 a3 a1^(1) where the derivation (and the constrained "
       "display of the same flow) gives 40"});

  // ---- second flow (y), threshold 0 ------------------------------------
  add({"eq20-l1", "Eq. (20) line 1, a1_y",
       [] { return flow_line(y2(), 1); }, "4*e*a2^(1)", "4*e*a2^(1)",
       Compare::exact, Status::match, ""});
  add({"eq20-l2", "Eq. (20) line 2, a2_y",
       [] { return flow_line(y2(), 2); },
       "4*e*a1*a1^(1) + 4*e*a3^(1)", "4*e*a3^(1) + 4*e*a1*a1^(1)",
       Compare::exact, Status::match, ""});
  add({"eq20-l3", "Eq. (20) line 3, a3_y",
       [] { return flow_line(y2(), 3); },
       "8*e*a1^(1)*a2 + 4*e*a4^(1)", "4*e*a4^(1) + 8*e*a1^(1)*a2",
       Compare::exact, Status::match, ""});
  add({"eq20-l4", "Eq. (20) line 4, a4_y",
       [] { return flow_line(y2(), 4); },
       "4*e^3*a1*a1^(3) + 12*e*a1^(1)*a3 + 4*e*a5^(1)",
       "4*e*a5^(1) + 12*e*a1^(1)*a3 + 4*e^3*a1*a1^(3)", Compare::exact,
       Status::match, ""});
  add({"eq19-p0", "Eq. (19), constant-level consistency of the y-flow",
       [] {
         std::string out;
         for (const auto& c : y2().constraints) out += render(c) + "; ";
         return out.empty() ? std::string("none") : out;
       },
       "none", "", Compare::exact, Status::match,
       "whether this flow forces p^0 conditions is left open in the text; "
       "the commutator with the >=0 projection has an identically zero "
       "constant level, so no constraint arises"});

  // ---- eliminations -----------------------------------------------------
  add({"eq22-a2", "Eq. (22) line 1, a2",
       [] { return eliminated_value(pipe25(), 2); },
       "1/4*e^-1*Dxi^1(a1^(0;1))", "1/4*e^-1*Dxi^1(a1^(0;1))", Compare::exact,
       Status::match, ""});
  add({"eq22-a3", "Eq. (22) line 2, a3",
       [] { return eliminated_value(pipe25(), 3); },
       "-Dxi^1(a1*a1^(1)) + 1/16*e^-2*Dxi^2(a1^(0;2))",
       "1/16*e^-2*Dxi^2(a1^(0;2)) - 1/2*a1*a1", Compare::semantic,
       Status::match,
       "the engine keeps the opaque antiderivative of a1 a1^(1); the "
       "printed -1/2 a1^2 differs from it by the integration constant only"});
  add({"eq22-a4", "Eq. (22) line 3, a4",
       [] { return eliminated_value(pipe25(), 4); },
       "-1/2*e^-1*Dxi^1(a1^(1)*Dxi^1(a1^(0;1))) - 1/4*e^-1*Dxi^2(a1*a1^(1;1)) "
       "- 1/4*e^-1*Dxi^2(a1^(0;1)*a1^(1)) + 1/64*e^-3*Dxi^3(a1^(0;3))",
       "", Compare::exact, Status::match,
       "the printed line is a recurrence in a3_y and a2; inserting the "
       "solved a2 and a3 reproduces exactly this value (checked in the "
       "unit suite)"});
  add({"eq18", "Eq. (18), scalar equation of the (3,5) BKP pipeline",
       [] { return render(pipe35().scalar.rhs); },
       "-32/9*e^5*a1^(5) - 40/3*e^3*a1*a1^(3) - 100/3*e^3*a1^(1)*a1^(2) + "
       "20/9*e^2*a1^(2;1) - 20*e*a1^(1)*Dxi^1(a1*a1^(1)) + 5*a1*a1^(0;1) + "
       "5/3*a1^(1)*Dxi^1(a1^(0;1)) - 10/3*Dxi^1(a1*a1^(1;1)) - "
       "10/3*Dxi^1(a1^(0;1)*a1^(1)) + 5/18*e^-1*Dxi^1(a1^(0;2))",
       "-32/9*e^5*a1^(5) - 40/3*e^3*a1^(3)*a1 - 100/3*e^3*a1^(1)*a1^(2) + "
       "20/9*e^2*a1^(2;1) - 10*e*a1*a1*a1^(1) + 5/3*a1*a1^(0;1) + "
       "5/3*a1^(1)*Dxi^1(a1^(0;1)) + 5/18*e^-1*Dxi^1(a1^(0;1))",
       Compare::semantic, Status::confirmed_typo,
       "the closing nonlocal term prints Dxi(a1_y) for Dxi(a1_yy) (one "
       "y-derivative short of the flow's weight); every other printed term "
       "agrees once the formal antiderivatives are resolved"});
  add({"eq23", "Eq. (23), scalar equation of the (2,5) pipeline",
       [] { return render(pipe25().scalar.rhs); },
       "2*e^5*a1^(5) + 10*e^3*a1*a1^(3) + 20*e^3*a1^(1)*a1^(2) + "
       "20*e*a1*a1*a1^(1) - 10*e*a1^(1)*Dxi^1(a1*a1^(1)) + 5/4*e*a1^(1;2) + "
       "5/2*e^-1*a1*Dxi^1(a1^(0;2)) + 5/2*e^-1*a1^(0;1)*Dxi^1(a1^(0;1)) + "
       "5/8*e^-1*a1^(1)*Dxi^2(a1^(0;2)) - "
       "5/4*e^-1*Dxi^1(a1^(1)*Dxi^1(a1^(0;2))) - "
       "5/4*e^-1*Dxi^1(a1^(1;1)*Dxi^1(a1^(0;1))) - "
       "5/8*e^-1*Dxi^2(a1*a1^(1;2)) - 5/4*e^-1*Dxi^2(a1^(0;1)*a1^(1;1)) - "
       "5/8*e^-1*Dxi^2(a1^(0;2)*a1^(1)) + 5/128*e^-3*Dxi^3(a1^(0;4))",
       "2*e^5*a1^(5) + 10*e^3*a1*a1^(3) + 20*e^3*a1^(1)*a1^(2) + "
       "15*e*a1*a1*a1^(1) + 5/4*e*a1^(1;2) + "
       "15/8*e^-1*Dxi^1(a1^(0;1)*a1^(0;1) + a1^(0;1)*a1^(0;2)) + "
       "5/4*e^-1*a1^(0;1)*Dxi^1(a1^(0;1)) - "
       "15/8*e^-1*a1^(1)*Dxi^2(a1^(0;2)) + 5/2*e^-1*a1*Dxi^1(a1^(0;2)) - "
       "5/128*e^-3*Dxi^3(a1^(0;4))",
       Compare::semantic, Status::confirmed_typo,
       "the local part and the leading nonlocal groups agree after "
       "resolving antiderivatives, but the printed e^-1 bracket mixes "
       "weight-9 terms (a1_y a1_yy under a single Dxi) and the closing "
       "Dxi^3 term carries a flipped sign: the four positive (1/4e) "
       "inversions of the elimination force +5/128"});

  // ---- modified (>=1) flows --------------------------------------------
  add({"eq25-l1", "Eq. (25) line 1, (L*3)_{>=1}",
       [] { return render(project(star_pow(lax_symbol(6), 3, -1), 1)); },
       "p^3 + (3*a1)*p", "p^3 + 3*a1*p", Compare::exact, Status::match, ""});
  add({"eq25-l2", "Eq. (25) line 2, (L*5)_{>=1}",
       [] { return render(project(star_pow(lax_symbol(6), 5, -1), 1)); },
       "p^5 + (5*a1)*p^3 + (5*a2)*p^2 + (10*e^2*a1^(2) + 10*a1*a1 + "
       "5*a3)*p",
       "p^5 + 5*a1*p^3 + 5*a2*p^2 + (5*a3 + 10*a1*a1 + 10*e^2*a1^(2))*p",
       Compare::exact, Status::match, ""});
  add({"eq26-c", "Eq. (26) line 1, constant-level constraint",
       [] {
         return y3_mod().constraints.empty()
                    ? std::string("<none>")
                    : render(y3_mod().constraints[0]);
       },
       "6*e*a2^(1)", "a2^(1)", Compare::scalar_multiple, Status::match, ""});
  add({"eq26-l2", "Eq. (26), a1_y of the >=1 flow",
       [] { return flow_line(y3_mod(), 1); },
       "2*e^3*a1^(3) + 12*e*a1*a1^(1) + 6*e*a3^(1)",
       "6*e*a3^(1) + 12*e*a1*a1^(1) + 2*e^3*a1^(3)", Compare::exact,
       Status::match, ""});
  add({"eq26-l3", "Eq. (26), a2_y of the >=1 flow",
       [] { return flow_line(y3_mod(), 2); },
       "2*e^3*a2^(3) + 6*e*a1*a2^(1) + 12*e*a1^(1)*a2 + 6*e*a4^(1)",
       "6*e*a4^(1) + 12*e*a2*a1^(2)", Compare::exact, Status::confirmed_typo,
       "the print drops the 2e^3 a2^(3) and 6e a1 a2^(1) terms and raises "
       "a1^(1) to a1^(2) in the term it keeps"});
  add({"eq26-l4", "Eq. (26), a3_y of the >=1 flow",
       [] { return flow_line(y3_mod(), 3); },
       "6*e^3*a1*a1^(3) + 6*e^3*a1^(1)*a1^(2) + 2*e^3*a3^(3) + "
       "6*e*a1*a3^(1) + 18*e*a1^(1)*a3 + 6*e*a5^(1)",
       "6*e*a5^(1) + 6*e*a1*a3^(1) + 18*e*a1^(1)*a3 + 2*e^3*a3^(3) + "
       "6*e^3*a1*a1^(3) + 6*e^3*a1^(1)*a1^(2)",
       Compare::exact, Status::match, ""});
  add({"eq27", "Eq. (27), a1_t of the >=1 flow under a2^(1) = 0",
       [] { return render(drop_a2_derivatives(flow_rhs(t5_mod(), 1))); },
       "2*e^5*a1^(5) + 40*e^3*a1*a1^(3) + 80*e^3*a1^(1)*a1^(2) + "
       "20*e^3*a3^(3) + 60*e*a1*a1*a1^(1) + 40*e*a1*a3^(1) + "
       "40*e*a1^(1)*a3 + 10*e*a5^(1)",
       "2*e^5*a1^(5) + 20*e^3*a3^(3) + 40*e^3*a1^(3)*a1 + "
       "80*e^3*a1^(2)*a1^(1) + 40*e*a1*a3^(1) + 40*e*a1^(1)*a3 + "
       "60*e*a1*a1*a1^(1) + 10*e*a5^(1)",
       Compare::exact, Status::match,
       "the raw >=1 flow equals the unconstrained display term for term "
       "(including its 40 a2 a2^(1), which the constant-level constraint "
       "kills); the companion display prints 60 a4^2 a1^(1) for "
       "60 a1^2 a1^(1) and leaves 10 a5^(1) outside the e bracket"});
  add({"eq27-scalar", "text after Eq. (27), eliminated >=1 pipeline",
       [] { return render(pipe35mod().scalar.rhs); },
       "-32/9*e^5*a1^(5) - 40/3*e^3*a1*a1^(3) - 100/3*e^3*a1^(1)*a1^(2) + "
       "20/9*e^2*a1^(2;1) - 20*e*a1^(1)*Dxi^1(a1*a1^(1)) + 5*a1*a1^(0;1) + "
       "5/3*a1^(1)*Dxi^1(a1^(0;1)) - 10/3*Dxi^1(a1*a1^(1;1)) - "
       "10/3*Dxi^1(a1^(0;1)*a1^(1)) + 5/18*e^-1*Dxi^1(a1^(0;2))",
       "", Compare::exact, Status::match,
       "eliminating the >=1 flows reproduces the constrained (3,5) scalar "
       "equation exactly, witnessing the claim that the modified flows "
       "give the same system without the constant-level restriction"});

  // ---- conservation ------------------------------------------------------
  add({"cons-n1-m3", "after Eq. (23), Res L is conserved along the 3-flow",
       [] {
         ConservationReport r = conservation_check(lax_symbol(3), 1, 3, 0);
         return r.all_conserved() ? std::string("conserved")
                                  : std::string("violated");
       },
       "conserved", "", Compare::exact, Status::match,
       "the flux of the density a1 is the a1_y flow line, a manifest total "
       "x-derivative"});

  // ---- dressing -----------------------------------------------------------
  add({"eq29", "Eq. (29), inverse relation",
       [] {
         DressingOperator s = dressing_operator(3);
         PSymbol prod = star_mul(s.body, invert(s));
         return render(prod.coeff(0)) + "; " + render(prod.coeff(-1)) + "; " +
                render(prod.coeff(-2)) + "; " + render(prod.coeff(-3));
       },
       "1; 0; 0; 0", "", Compare::exact, Status::confirmed_typo,
       "the text prints s + s^-1 = 1, which has no triangular solution "
       "compatible with the listed u values; read as the star-product "
       "relation s * s^-1 = 1"});
  add({"eq31-u1", "Eq. (31), u1",
       [] { return render(u_solutions(dressing_operator(3))[0]); }, "-w1",
       "-w1", Compare::exact, Status::match, ""});
  add({"eq31-u2", "Eq. (31), u2",
       [] { return render(u_solutions(dressing_operator(3))[1]); },
       "w1*w1 - w2", "-w2 + w1*w1", Compare::exact, Status::match, ""});
  add({"eq31-u3", "Eq. (31) line 3, u3",
       [] { return render(u_solutions(dressing_operator(3))[2]); },
       "-w1*w1*w1 + 2*w1*w2 - w3", "-w3 - w1*w1 + 2*w1*w2", Compare::exact,
       Status::confirmed_typo,
       "the line is labelled u2 and mixes weights (w1^2 where only "
       "weight-3 terms can appear); the recursion gives "
       "-w3 + 2 w1 w2 - w1^3, with all epsilon corrections cancelling"});
  add({"eq33-a1", "Eq. (33) line 1, a1",
       [] {
         DressingOperator s = dressing_operator(4);
         PSymbol c = resolve_u(conjugate(s, 1, -2), u_solutions(s));
         return render(c.coeff(-1));
       },
       "-2*e*w1^(1)", "-2*e*w1^(1)", Compare::exact, Status::match, ""});
  add({"eq33-a2", "Eq. (33) line 2, a2",
       [] {
         DressingOperator s = dressing_operator(4);
         PSymbol c = resolve_u(conjugate(s, 1, -2), u_solutions(s));
         return render(c.coeff(-2));
       },
       "2*e*w1*w1^(1) - 2*e*w2^(1)", "-2*e*w2^(1) + 2*e*w1*w1^(1)",
       Compare::exact, Status::match, ""});
  add({"eq33-a3", "Eq. (33) line 3, a3 before resolving the u's",
       [] {
         DressingOperator s = dressing_operator(5);
         return render(conjugate(s, 1, -3).coeff(-3));
       },
       "e^2*w1^(1)*u1^(1) + e*w1^(1)*u2 - e*w2*u1^(1) - e*w3^(1) + "
       "e*u3^(1) + w1*u3 + w2*u2 + w3*u1 + w4 + u4",
       "u4 + w4 + w1*u3 + w2*u2 + w3*u1 + e*(u3^(1) - w3^(1) + w1^(1)*u2 - "
       "w2*u1^(1)) + e^2*w1^(1)*u1^(1)",
       Compare::exact, Status::match, ""});
  add({"eq34", "Eq. (34), p-coefficient of s p^3 s^-1",
       [] {
         DressingOperator s = dressing_operator(4);
         return render(conjugate(s, 3, 1).coeff(1));
       },
       "-3*e*w1^(1) + 3*e*u1^(1) + w1*u1 + w2 + u2",
       "u2 + w2 + w1*u1 + 3*e*u1^(1) - 3*e*w1^(1)", Compare::exact,
       Status::match, ""});
  add({"eq35", "Eq. (35), (s p^3 s^-1)_+ = p^3 + 3 a1 p + 3 a2",
       [] { return dressing_projection_gap(3, 5); }, "0", "",
       Compare::exact, Status::match, ""});
  add({"eq36", "Eq. (36), (s p^5 s^-1)_+ against L*5",
       [] { return dressing_projection_gap(5, 7); }, "0", "",
       Compare::exact, Status::confirmed_typo,
       "holds with the p-coefficient read as 10 e^2 a1^(2); the print's "
       "10 a1^2 a1^(2) matches neither the weight count nor the L*5 "
       "expansion it is equated with"});

  return rows;
}

// Equality up to a unit c e^k, the freedom a vanishing constraint has.
bool proportional(const DiffPoly& a, const DiffPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
  Rational ratio = a.terms()[0].coeff / b.terms()[0].coeff;
  int eps_shift = a.terms()[0].eps - b.terms()[0].eps;
  return a == b.scaled(ratio, eps_shift);
}

}  // namespace

const std::vector<Entry>& entries() {
  static const std::vector<Entry> rows = build();
  return rows;
}

Outcome run_entry(const Entry& e) {
  Outcome o;
  o.entry = &e;
  o.engine_value = e.engine();
  o.regression_ok = !e.pinned.empty() && o.engine_value == e.pinned;
  if (e.printed.empty()) {
    // documentation-only row; the derivation itself is the record
    o.printed_ok = true;
    return o;
  }
  bool matches = false;
  switch (e.compare) {
    case Compare::exact:
      matches =
          parse_symbol(o.engine_value).same_terms(parse_symbol(e.printed));
      break;
    case Compare::scalar_multiple:
      matches = proportional(parse_poly(o.engine_value), parse_poly(e.printed));
      break;
    case Compare::semantic: {
      matches = true;
      DiffPoly engine_poly = parse_poly(o.engine_value);
      DiffPoly printed_poly = parse_poly(e.printed);
      for (const EvalSeed& seed : a1_seeds())
        matches = matches &&
                  evaluate(engine_poly, seed) == evaluate(printed_poly, seed);
      break;
    }
  }
  o.printed_ok = (e.status == Status::match) ? matches : !matches;
  return o;
}

std::vector<Outcome> run_all() {
  std::vector<Outcome> out;
  for (const Entry& e : entries()) out.push_back(run_entry(e));
  return out;
}

}  // namespace moyal::corpus
