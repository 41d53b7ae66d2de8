#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "corpus.hpp"
#include "moyal/dressing.hpp"
#include "moyal/error.hpp"
#include "moyal/hierarchy.hpp"
#include "moyal/json_io.hpp"
#include "moyal/text.hpp"

namespace {

using namespace moyal;

int depth_limit() {
  if (const char* env = std::getenv("MOYAL_DEPTH_LIMIT")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 12;
}

void check_depth(int depth) {
  if (depth > depth_limit())
    throw CLI::ValidationError(
        "depth", "internal truncation depth " + std::to_string(depth) +
                     " exceeds MOYAL_DEPTH_LIMIT=" +
                     std::to_string(depth_limit()));
}

std::string time_label_for(unsigned m) {
  if (m == 5) return "t";
  if (m == 2 || m == 3) return "y";
  return "t" + std::to_string(m);
}

void print_flow(const FlowResult& fr, bool as_json) {
  if (as_json) {
    std::cout << to_json(fr).dump(2) << "\n";
    return;
  }
  for (const auto& c : fr.constraints)
    std::cout << "constraint: " << render(c) << " = 0\n";
  for (const auto& eq : fr.equations)
    std::cout << render(eq.target) << "_" << eq.time_label << " = "
              << render(eq.rhs) << "\n";
}

int cmd_star(const std::string& lhs, const std::string& rhs,
             std::optional<int> floor, bool as_json) {
  PSymbol f = parse_symbol(lhs);
  PSymbol g = parse_symbol(rhs);
  PSymbol prod = star_mul(f, g, floor);
  if (as_json)
    std::cout << to_json(prod).dump(2) << "\n";
  else
    std::cout << render(prod) << "\n";
  return 0;
}

int cmd_power(unsigned exp, int depth, int floor, bool as_json) {
  check_depth(depth);
  PSymbol out = star_pow(lax_symbol(depth), exp, floor);
  if (as_json)
    std::cout << to_json(out).dump(2) << "\n";
  else
    std::cout << render(out) << "\n";
  return 0;
}

int cmd_flow(unsigned m, int threshold, int depth, bool bkp, bool as_json) {
  const int lax_depth = depth + static_cast<int>(m) - 1;
  check_depth(lax_depth);
  FlowResult fr =
      flow_equations(lax_symbol(lax_depth), m, threshold, depth, time_label_for(m));
  if (bkp) fr = impose_bkp(fr);
  print_flow(fr, as_json);
  return 0;
}

int cmd_bkp(const std::string& pipeline, bool as_json) {
  ScalarDerivation d;
  if (pipeline == "35")
    d = derive_scalar_equation(3, 5, 0);
  else if (pipeline == "25")
    d = derive_scalar_equation(2, 5, 0);
  else if (pipeline == "35mod")
    d = derive_scalar_equation(3, 5, 1);
  else
    throw CLI::ValidationError("--pipeline", "expected 35, 25 or 35mod");
  if (as_json) {
    std::cout << to_json(d).dump(2) << "\n";
  } else {
    std::cout << render(d.scalar.target) << "_" << d.scalar.time_label
              << " = " << render(d.scalar.rhs) << "\n";
  }
  return 0;
}

int cmd_dress(int k, int depth, bool as_json) {
  check_depth(depth);
  DressingReport r = dressing_consistency(dressing_operator(depth), k);
  if (as_json) {
    std::cout << to_json(r).dump(2) << "\n";
  } else {
    for (const auto& row : r.rows) {
      std::cout << "p^" << row.exponent << ": ";
      if (row.residual.is_zero())
        std::cout << "ok  " << render(row.lhs) << "\n";
      else
        std::cout << "MISMATCH  lhs = " << render(row.lhs)
                  << "  rhs = " << render(row.rhs)
                  << "  residual = " << render(row.residual) << "\n";
    }
    std::cout << (r.ok ? "consistent" : "inconsistent") << "\n";
  }
  return r.ok ? 0 : 1;
}

int cmd_conserve(unsigned n, unsigned m, int threshold, bool as_json) {
  const int depth = static_cast<int>(n + m) - 1;
  check_depth(depth);
  ConservationReport r = conservation_check(lax_symbol(depth), n, m, threshold);
  if (as_json) {
    std::cout << to_json(r).dump(2) << "\n";
  } else {
    std::cout << "flux = " << render(r.flux) << "\n";
    for (const auto& v : r.verdicts)
      std::cout << render(v.gen) << ": "
                << (v.conserved ? "total derivative"
                                : "NOT a total derivative, Euler image = " +
                                      render(v.euler_image))
                << "\n";
    std::cout << (r.all_conserved() ? "conserved" : "violated") << "\n";
  }
  return r.all_conserved() ? 0 : 1;
}

int cmd_verify(bool as_json, bool dump) {
  std::vector<corpus::Outcome> outcomes = corpus::run_all();
  int failures = 0;
  int typos = 0;
  if (dump) {
    for (const auto& o : outcomes)
      std::cout << o.entry->id << "\n  " << o.engine_value << "\n";
    return 0;
  }
  // A row that fails its comparison is an unresolved ledger entry; verify
  // refuses to pass while any exists.
  auto status_of = [](const corpus::Outcome& o) {
    if (!o.pass()) return "unresolved";
    return o.entry->status == corpus::Status::match ? "match"
                                                    : "confirmed-typo";
  };
  if (as_json) {
    json rows = json::array();
    for (const auto& o : outcomes) {
      rows.push_back(json{{"id", o.entry->id},
                          {"location", o.entry->location},
                          {"pass", o.pass()},
                          {"regression_ok", o.regression_ok},
                          {"printed_ok", o.printed_ok},
                          {"status", status_of(o)},
                          {"engine", o.engine_value},
                          {"printed", o.entry->printed},
                          {"note", o.entry->note}});
      if (!o.pass()) ++failures;
    }
    std::cout << rows.dump(2) << "\n";
    return failures == 0 ? 0 : 1;
  }
  for (const auto& o : outcomes) {
    if (o.entry->status == corpus::Status::confirmed_typo) ++typos;
    std::cout << (o.pass() ? "PASS" : "FAIL") << "  " << o.entry->location
              << "  [" << status_of(o) << "]" << "\n";
    if (!o.pass()) {
      ++failures;
      std::cout << "      engine:  " << o.engine_value << "\n";
      if (!o.entry->pinned.empty())
        std::cout << "      pinned:  " << o.entry->pinned << "\n";
      if (!o.entry->printed.empty())
        std::cout << "      printed: " << o.entry->printed << "\n";
    }
  }
  std::cout << outcomes.size() << " comparisons, " << failures << " failures, "
            << typos << " ledger entries flagged as confirmed typos\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "moyal: exact Moyal-deformed pseudo-differential calculus and the "
      "BKP-type hierarchy built on it"};
  app.require_subcommand(1);

  std::string lhs, rhs, pipeline{"35"};
  std::optional<int> star_floor;
  unsigned exp = 2, flow_m = 3, cons_n = 1, cons_m = 3;
  int depth = 6, floor = -1, threshold = 0, dress_k = 3, dress_depth = 7;
  bool as_json = false, bkp = false, dump = false;

  CLI::App* star = app.add_subcommand("star", "star product of two symbols");
  star->add_option("--lhs", lhs, "left factor")->required();
  star->add_option("--rhs", rhs, "right factor")->required();
  star->add_option("--floor", star_floor,
                   "window floor (needed when the tail is infinite)");
  star->add_flag("--json", as_json, "emit JSON");

  CLI::App* power = app.add_subcommand("power", "star power of the Lax symbol");
  power->add_option("--exp", exp, "exponent m")
      ->required()
      ->check(CLI::PositiveNumber);
  power->add_option("--depth", depth, "tail depth of L")
      ->required()
      ->check(CLI::PositiveNumber);
  power->add_option("--floor", floor, "exactness floor of the result")
      ->required();
  power->add_flag("--json", as_json, "emit JSON");

  CLI::App* flow = app.add_subcommand("flow", "evolution equations of a flow");
  flow->add_option("--m", flow_m, "flow index m")
      ->required()
      ->check(CLI::PositiveNumber);
  flow->add_option("--threshold", threshold, "projection threshold (0 or 1)")
      ->check(CLI::Range(0, 1));
  flow->add_option("--depth", depth, "number of generator equations")
      ->required()
      ->check(CLI::PositiveNumber);
  flow->add_flag("--bkp", bkp, "impose the BKP constraint");
  flow->add_flag("--json", as_json, "emit JSON");

  CLI::App* bkp_cmd =
      app.add_subcommand("bkp", "scalar (2+1)-dimensional equation");
  bkp_cmd->add_option("--pipeline", pipeline, "35, 25 or 35mod")->required();
  bkp_cmd->add_flag("--json", as_json, "emit JSON");

  CLI::App* dress = app.add_subcommand("dress", "dressing consistency report");
  dress->add_option("--k", dress_k, "conjugation power (3 or 5)")
      ->check(CLI::IsMember({3, 5}));
  dress->add_option("--depth", dress_depth, "dressing tail depth")
      ->check(CLI::PositiveNumber);
  dress->add_flag("--json", as_json, "emit JSON");

  CLI::App* conserve =
      app.add_subcommand("conserve", "total-derivative test for Res L^n");
  conserve->add_option("--n", cons_n, "density power (odd)")
      ->required()
      ->check(CLI::PositiveNumber);
  conserve->add_option("--m", cons_m, "flow index")
      ->required()
      ->check(CLI::PositiveNumber);
  conserve->add_option("--threshold", threshold, "projection threshold");
  conserve->add_flag("--json", as_json, "emit JSON");

  CLI::App* verify =
      app.add_subcommand("verify", "run the regression corpus and ledger");
  verify->add_flag("--json", as_json, "emit JSON");
  verify->add_flag("--dump", dump, "print engine values for re-pinning");

  try {
    app.parse(argc, argv);
    if (star->parsed()) return cmd_star(lhs, rhs, star_floor, as_json);
    if (power->parsed()) return cmd_power(exp, depth, floor, as_json);
    if (flow->parsed()) return cmd_flow(flow_m, threshold, depth, bkp, as_json);
    if (bkp_cmd->parsed()) return cmd_bkp(pipeline, as_json);
    if (dress->parsed()) return cmd_dress(dress_k, dress_depth, as_json);
    if (conserve->parsed())
      return cmd_conserve(cons_n, cons_m, threshold, as_json);
    if (verify->parsed()) return cmd_verify(as_json, dump);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const moyal::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::inconsistent_reduction ? 1 : 2;
  }
  return 0;
}
