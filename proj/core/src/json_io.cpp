#include "moyal/json_io.hpp"

#include "moyal/error.hpp"
#include "moyal/text.hpp"

namespace moyal {

namespace {

json atom_to_json(const Atom& a) {
  if (a.is_integral())
    return json{{"int", {{"depth", a.depth()}, {"body", to_json(a.body())}}}};
  return json{{"gen", render(a.gen_id())}, {"x", a.x_order()}, {"y", a.y_order()}};
}

Atom gen_atom_from_json(const json& j) {
  GenId id = parse_gen(j.at("gen").get<std::string>());
  return Atom::generator(id, j.value("x", 0), j.value("y", 0));
}

}  // namespace

json to_json(const DiffPoly& p) {
  json out = json::array();
  for (const auto& m : p.terms()) {
    json atoms = json::array();
    for (const auto& a : m.atoms) atoms.push_back(atom_to_json(a));
    out.push_back(json{{"coeff", m.coeff.str()},
                       {"eps", m.eps},
                       {"atoms", std::move(atoms)}});
  }
  return out;
}

DiffPoly poly_from_json(const json& j) {
  DiffPoly out;
  for (const json& jm : j) {
    DiffPoly term(Monomial{Rational::parse(jm.at("coeff").get<std::string>()),
                           jm.value("eps", 0),
                           {}});
    for (const json& ja : jm.at("atoms")) {
      if (ja.contains("int")) {
        // rebuild through integrate_x so body invariants hold for any input
        const json& in = ja.at("int");
        DiffPoly factor = poly_from_json(in.at("body"));
        const int depth = in.at("depth").get<int>();
        for (int d = 0; d < depth; ++d) factor = integrate_x(factor);
        term = term * factor;
      } else {
        term = term * DiffPoly(Monomial{Rational(1), 0, {gen_atom_from_json(ja)}});
      }
    }
    out = out + term;
  }
  return out;
}

json to_json(const PSymbol& f) {
  json terms = json::array();
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it)
    terms.push_back(json{{"p", it->first}, {"coeff", to_json(it->second)}});
  json out{{"terms", std::move(terms)}};
  out["floor"] = f.floor() ? json(*f.floor()) : json(nullptr);
  return out;
}

PSymbol symbol_from_json(const json& j) {
  PSymbol out;
  for (const json& jt : j.at("terms"))
    out.set_coeff(jt.at("p").get<int>(), poly_from_json(jt.at("coeff")));
  const json& fl = j.at("floor");
  out.set_floor(fl.is_null() ? std::optional<int>{} : std::optional<int>{fl.get<int>()});
  return out;
}

json to_json(const FlowEquation& eq) {
  return json{{"target", render(eq.target)},
              {"time", eq.time_label},
              {"rhs", to_json(eq.rhs)}};
}

FlowEquation flow_equation_from_json(const json& j) {
  return FlowEquation{parse_gen(j.at("target").get<std::string>()),
                      j.at("time").get<std::string>(),
                      poly_from_json(j.at("rhs"))};
}

json to_json(const FlowResult& fr) {
  json eqs = json::array();
  for (const auto& eq : fr.equations) eqs.push_back(to_json(eq));
  json cons = json::array();
  for (const auto& c : fr.constraints) cons.push_back(to_json(c));
  return json{{"m", fr.m},
              {"threshold", fr.threshold},
              {"time", fr.time_label},
              {"equations", std::move(eqs)},
              {"constraints", std::move(cons)}};
}

FlowResult flow_result_from_json(const json& j) {
  FlowResult fr;
  fr.m = j.at("m").get<unsigned>();
  fr.threshold = j.at("threshold").get<int>();
  fr.time_label = j.at("time").get<std::string>();
  for (const json& je : j.at("equations"))
    fr.equations.push_back(flow_equation_from_json(je));
  for (const json& jc : j.at("constraints"))
    fr.constraints.push_back(poly_from_json(jc));
  return fr;
}

json to_json(const ScalarDerivation& d) {
  json elim = json::array();
  for (const auto& [g, sol] : d.eliminated)
    elim.push_back(json{{"gen", render(g)}, {"value", to_json(sol)}});
  return json{{"equation", to_json(d.scalar)}, {"eliminated", std::move(elim)}};
}

json to_json(const ConservationReport& r) {
  json verdicts = json::array();
  for (const auto& v : r.verdicts)
    verdicts.push_back(json{{"gen", render(v.gen)},
                            {"conserved", v.conserved},
                            {"euler_image", to_json(v.euler_image)}});
  return json{{"n", r.n},
              {"m", r.m},
              {"threshold", r.threshold},
              {"flux", to_json(r.flux)},
              {"verdicts", std::move(verdicts)}};
}

json to_json(const DressingReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows)
    rows.push_back(json{{"p", row.exponent},
                        {"lhs", to_json(row.lhs)},
                        {"rhs", to_json(row.rhs)},
                        {"residual", to_json(row.residual)}});
  return json{{"k", r.k}, {"depth", r.depth}, {"ok", r.ok}, {"rows", std::move(rows)}};
}

}  // namespace moyal
