#pragma once

#include "json.hpp"
#include "moyal/dressing.hpp"
#include "moyal/hierarchy.hpp"

namespace moyal {

using nlohmann::json;

/// DiffPoly: [ {"coeff":"-32/9","eps":5,"atoms":[{"gen":"a1","x":5,"y":0}]} ];
/// antiderivative atoms as {"int":{"depth":1,"body":[...]}}.
json to_json(const DiffPoly& p);
DiffPoly poly_from_json(const json& j);

/// PSymbol: {"floor":-3|null,"terms":[{"p":2,"coeff":[...]},...]} in
/// descending p.
json to_json(const PSymbol& f);
PSymbol symbol_from_json(const json& j);

json to_json(const FlowEquation& eq);
FlowEquation flow_equation_from_json(const json& j);

json to_json(const FlowResult& fr);
FlowResult flow_result_from_json(const json& j);

json to_json(const ScalarDerivation& d);
json to_json(const ConservationReport& r);
json to_json(const DressingReport& r);

}  // namespace moyal
