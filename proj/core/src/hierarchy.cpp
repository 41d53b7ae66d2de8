#include "moyal/hierarchy.hpp"

#include <algorithm>
#include <set>

#include "moyal/error.hpp"
#include "moyal/text.hpp"

namespace moyal {

PSymbol lax_symbol(int depth) {
  PSymbol L = PSymbol::p_power(1);
  for (int m = 1; m <= depth; ++m)
    L.set_coeff(-m, DiffPoly::generator(Family::a, m));
  L.set_floor(-depth);
  return L;
}

PSymbol lax_rhs(const PSymbol& L, unsigned m, int threshold, int floor) {
  if (L.degree() != std::optional<int>(1) || !(L.coeff(1) == DiffPoly::one()))
    throw Error(Errc::bad_lax_shape,
                "lax_rhs: L must have degree 1 with unit leading coefficient");
  PSymbol plus = project(star_pow(L, m, threshold), threshold);
  PSymbol r = commutator(plus, L, floor);
  if (!r.exact() && *r.floor() > floor)
    throw Error(Errc::insufficient_depth,
                "lax_rhs: L is too shallow for exactness down to p^" +
                    std::to_string(floor));
  return r.truncated_to(floor);
}

FlowResult flow_equations(const PSymbol& L, unsigned m, int threshold,
                          int depth, std::string time_label) {
  FlowResult out;
  out.m = m;
  out.threshold = threshold;
  out.time_label = time_label;
  PSymbol r = lax_rhs(L, m, threshold, -depth);
  if (auto deg = r.degree()) {
    for (int e = *deg; e >= 0; --e) {
      const DiffPoly& c = r.coeff(e);
      if (!c.is_zero()) out.constraints.push_back(c);
    }
  }
  for (int j = 1; j <= depth; ++j)
    out.equations.push_back(
        FlowEquation{GenId{Family::a, j}, time_label, r.coeff(-j)});
  return out;
}

namespace {

std::set<int> even_indices_in(const FlowResult& fr) {
  std::set<int> evens;
  auto scan = [&evens](const DiffPoly& p) {
    for (GenId g : generators_in(p))
      if (g.family == Family::a && g.index % 2 == 0) evens.insert(g.index);
  };
  for (const auto& eq : fr.equations) {
    if (eq.target.index % 2 == 0) evens.insert(eq.target.index);
    scan(eq.rhs);
  }
  for (const auto& c : fr.constraints) scan(c);
  return evens;
}

DiffPoly zero_out_evens(const DiffPoly& p, const std::set<int>& evens) {
  DiffPoly out = p;
  for (int idx : evens)
    out = substitute(out, GenId{Family::a, idx}, DiffPoly::zero());
  return out;
}

}  // namespace

FlowResult impose_bkp(const FlowResult& flows) {
  const std::set<int> evens = even_indices_in(flows);
  FlowResult out;
  out.m = flows.m;
  out.threshold = flows.threshold;
  out.time_label = flows.time_label;
  for (const auto& eq : flows.equations) {
    DiffPoly rhs = zero_out_evens(eq.rhs, evens);
    if (eq.target.index % 2 == 0) {
      if (!rhs.is_zero())
        throw Error(Errc::inconsistent_reduction,
                    "BKP reduction leaves a nonzero rhs for " +
                        render(eq.target) + "_" + eq.time_label + ": " +
                        render(rhs));
      continue;  // 0 = 0, dropped
    }
    out.equations.push_back(FlowEquation{eq.target, eq.time_label, rhs});
  }
  for (const auto& c : flows.constraints) {
    DiffPoly reduced = zero_out_evens(c, evens);
    if (!reduced.is_zero()) out.constraints.push_back(reduced);
  }
  return out;
}

DiffPoly solve_for(const FlowEquation& eq, GenId gen) {
  if (eq.time_label != "y")
    throw Error(Errc::not_solvable,
                "solve_for: only y-labeled equations can be inverted (the "
                "ring carries no t-derivative atoms)");
  if (eq.target == gen)
    throw Error(Errc::not_solvable,
                "solve_for: target generator appears on both sides");

  const Monomial* pivot = nullptr;
  for (const auto& m : eq.rhs.terms()) {
    bool direct = false;
    for (const auto& a : m.atoms) {
      if (a.is_integral()) {
        if (contains_generator(a.body(), gen))
          throw Error(Errc::not_solvable,
                      "solve_for: " + render(gen) +
                          " occurs inside an antiderivative");
      } else if (a.gen_id() == gen) {
        direct = true;
      }
    }
    if (!direct) continue;
    if (pivot)
      throw Error(Errc::not_solvable,
                  "solve_for: " + render(gen) + " occurs in several monomials");
    pivot = &m;
  }
  if (!pivot)
    throw Error(Errc::not_solvable,
                "solve_for: " + render(gen) + " does not occur in the rhs");
  if (pivot->atoms.size() != 1)
    throw Error(Errc::not_solvable,
                "solve_for: the monomial containing " + render(gen) +
                    " is not linear with scalar coefficient");
  const Atom& a = pivot->atoms[0];
  if (a.y_order() != 0 || a.x_order() < 1)
    throw Error(Errc::not_solvable,
                "solve_for: " + render(gen) +
                    " must occur as a pure x-derivative of order >= 1");

  DiffPoly rest = eq.rhs - DiffPoly(*pivot);
  DiffPoly lhs = DiffPoly::generator(eq.target.family, eq.target.index, 0, 1);
  DiffPoly solved = (lhs - rest).scaled(pivot->coeff.reciprocal(), -pivot->eps);
  for (int d = 0; d < a.x_order(); ++d) solved = integrate_x(solved);
  return solved;
}

namespace {

/// Derivative-vanishing rules harvested from constraints of the form
/// c e^k a_j^(d) = 0: every occurrence of a_j with x_order >= d is zero.
struct KillRule {
  GenId gen;
  int min_x_order;
};

std::vector<KillRule> kill_rules(const FlowResult& fr) {
  std::vector<KillRule> rules;
  for (const auto& c : fr.constraints) {
    if (c.terms().size() != 1) continue;
    const Monomial& m = c.terms()[0];
    if (m.atoms.size() != 1 || m.atoms[0].is_integral()) continue;
    const Atom& a = m.atoms[0];
    if (a.y_order() != 0 || a.x_order() < 1) continue;
    rules.push_back({a.gen_id(), a.x_order()});
  }
  return rules;
}

bool monomial_killed(const Monomial& m, const std::vector<KillRule>& rules);

bool poly_killed_part(const DiffPoly& p, const std::vector<KillRule>& rules) {
  for (const auto& m : p.terms())
    if (monomial_killed(m, rules)) return true;
  return false;
}

// Antiderivative bodies are single monomials, so a killed body zeroes the
// whole Dxi atom and with it the containing monomial.
bool monomial_killed(const Monomial& m, const std::vector<KillRule>& rules) {
  for (const auto& a : m.atoms) {
    if (a.is_integral()) {
      if (poly_killed_part(a.body(), rules)) return true;
      continue;
    }
    for (const auto& r : rules)
      if (a.gen_id() == r.gen && a.x_order() >= r.min_x_order) return true;
  }
  return false;
}

DiffPoly apply_kill_rules(const DiffPoly& p, const std::vector<KillRule>& rules) {
  if (rules.empty()) return p;
  std::vector<Monomial> kept;
  for (const auto& m : p.terms())
    if (!monomial_killed(m, rules)) kept.push_back(m);
  return DiffPoly::normalized(std::move(kept));
}

/// Lowest a_j with j >= 2 anywhere in p (antiderivative bodies included);
/// 0 when p is a_1-pure.
int lowest_auxiliary(const DiffPoly& p) {
  for (GenId g : generators_in(p))
    if (g.family == Family::a && g.index >= 2)
      return g.index;  // generators_in is (family, index)-sorted
  return 0;
}

}  // namespace

ScalarDerivation derive_scalar_equation(unsigned m_y, unsigned m_t,
                                        int threshold) {
  if (m_y < 2 || m_t <= m_y)
    throw Error(Errc::elimination_stuck,
                "derive_scalar_equation: need 2 <= m_y < m_t");
  const bool bkp = (m_y % 2 == 1) && threshold == 0;

  // Window sizes: the t-equation for a_1 reaches a_{m_t}; solving a_j uses
  // the y-equation of a_{j - m_y + 1}. The BKP check additionally wants the
  // even equations present.
  const int need_y = static_cast<int>(m_t - m_y + 1);
  const int depth_y = bkp ? std::max(need_y, 4) : need_y;
  const int depth_t = bkp ? 2 : 1;

  PSymbol Ly = lax_symbol(depth_y + static_cast<int>(m_y) - 1);
  PSymbol Lt = lax_symbol(depth_t + static_cast<int>(m_t) - 1);

  ScalarDerivation out;
  out.y_flow = flow_equations(Ly, m_y, threshold, depth_y, "y");
  out.t_flow = flow_equations(Lt, m_t, threshold, depth_t, "t");
  if (bkp) {
    out.y_flow = impose_bkp(out.y_flow);
    out.t_flow = impose_bkp(out.t_flow);
  }
  const std::vector<KillRule> rules = kill_rules(out.y_flow);

  const FlowEquation* a1t = nullptr;
  for (const auto& eq : out.t_flow.equations)
    if (eq.target == GenId{Family::a, 1}) a1t = &eq;
  if (!a1t)
    throw Error(Errc::elimination_stuck,
                "derive_scalar_equation: no t-equation for a1");

  DiffPoly rhs = apply_kill_rules(a1t->rhs, rules);
  for (int round = 0; round < 64; ++round) {
    const int j = lowest_auxiliary(rhs);
    if (j == 0) {
      out.scalar = FlowEquation{GenId{Family::a, 1}, "t", rhs};
      return out;
    }
    const GenId gen{Family::a, j};
    const DiffPoly* known = nullptr;
    for (const auto& [g, sol] : out.eliminated)
      if (g == gen) known = &sol;
    DiffPoly solution;
    if (known) {
      solution = *known;
    } else {
      const int source = j - static_cast<int>(m_y) + 1;
      const FlowEquation* src = nullptr;
      for (const auto& eq : out.y_flow.equations)
        if (eq.target.index == source && eq.target.family == Family::a)
          src = &eq;
      if (source < 1 || !src)
        throw Error(Errc::elimination_stuck,
                    "derive_scalar_equation: no y-equation yields " +
                        render(gen));
      FlowEquation prepped = *src;
      prepped.rhs = apply_kill_rules(prepped.rhs, rules);
      for (const auto& [g, sol] : out.eliminated)
        prepped.rhs = substitute(prepped.rhs, g, sol);
      solution = solve_for(prepped, gen);
      for (const auto& [g, sol] : out.eliminated)
        solution = substitute(solution, g, sol);
      solution = apply_kill_rules(solution, rules);
      out.eliminated.emplace_back(gen, solution);
    }
    rhs = apply_kill_rules(substitute(rhs, gen, solution), rules);
  }
  throw Error(Errc::elimination_stuck,
              "derive_scalar_equation: elimination did not terminate");
}

bool ConservationReport::all_conserved() const {
  for (const auto& v : verdicts)
    if (!v.conserved) return false;
  return true;
}

ConservationReport conservation_check(const PSymbol& L, unsigned n, unsigned m,
                                      int threshold) {
  ConservationReport report;
  report.n = n;
  report.m = m;
  report.threshold = threshold;
  PSymbol plus = project(star_pow(L, m, threshold), threshold);
  PSymbol Ln = star_pow(L, n, -static_cast<int>(m));
  report.flux = residue(commutator(plus, Ln, -1));
  for (GenId g : generators_in(report.flux)) {
    DiffPoly image = euler_op(report.flux, g);
    report.verdicts.push_back({g, image.is_zero(), std::move(image)});
  }
  return report;
}

}  // namespace moyal
