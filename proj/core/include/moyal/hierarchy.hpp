#pragma once

#include <string>
#include <utility>
#include <vector>

#include "moyal/psymbol.hpp"

namespace moyal {

/// Evolution equation d/d<time_label> target = rhs. The rhs never contains
/// the target's time derivative; y-derivatives inside it are plain
/// generator atoms (the t label only ever appears on left-hand sides).
struct FlowEquation {
  GenId target;
  std::string time_label;
  DiffPoly rhs;
};

/// Equations read off one Lax flow plus the expressions that must vanish
/// identically (coefficients at exponents the Lax symbol cannot absorb,
/// i.e. p^0 and above). With the >=0 projection the constraint list is
/// empty.
struct FlowResult {
  unsigned m = 0;
  int threshold = 0;
  std::string time_label;
  std::vector<FlowEquation> equations;
  std::vector<DiffPoly> constraints;
};

/// p + a_1 p^-1 + ... + a_depth p^-depth with exactness floor -depth.
PSymbol lax_symbol(int depth);

/// Commutator of the projected m-th star power with L, exact down to
/// `floor`: [ (L^*m)_{>=threshold}, L ]. Throws Errc::bad_lax_shape unless
/// L has degree 1 with unit leading coefficient, Errc::insufficient_depth
/// when L's floor cannot support the request.
PSymbol lax_rhs(const PSymbol& L, unsigned m, int threshold, int floor);

/// Reads the p^-j coefficient of lax_rhs as the rhs of a_{j,time} for
/// j = 1..depth and every nonzero coefficient at p^0 and above as a
/// constraint.
FlowResult flow_equations(const PSymbol& L, unsigned m, int threshold,
                          int depth, std::string time_label);

/// BKP reduction: substitute zero for every even-indexed generator, check
/// the dropped even equations become 0 = 0 (Errc::inconsistent_reduction
/// with the offending residual otherwise), and return the surviving system.
FlowResult impose_bkp(const FlowResult& flows);

/// Solve eq for gen when the rhs is c e^k gen^(d) + rest with d >= 1 and
/// gen nowhere else: gen = (1/c) e^-k Dxi^d( lhs - rest ), normalized
/// through integrate_x. Throws Errc::not_solvable when the shape is wrong
/// or the equation is not y-labeled.
DiffPoly solve_for(const FlowEquation& eq, GenId gen);

/// Full elimination record of one pipeline.
struct ScalarDerivation {
  FlowEquation scalar;
  FlowResult y_flow;   // post-reduction when the BKP constraint applies
  FlowResult t_flow;
  std::vector<std::pair<GenId, DiffPoly>> eliminated;  // in solve order
};

/// Derive both flows, reduce (BKP for odd y-flows at threshold 0), then
/// repeatedly solve_for + substitute until a_1t is expressed in a_1 alone
/// (with antiderivatives and y-derivatives). Supported pipelines:
/// (3,5) threshold 0, (2,5) threshold 0, (3,5) threshold 1.
ScalarDerivation derive_scalar_equation(unsigned m_y, unsigned m_t,
                                        int threshold);

struct ConservationVerdict {
  GenId gen;
  bool conserved;
  DiffPoly euler_image;
};

/// Flux of the density Res(L^*n) along the m-flow and the total-derivative
/// test per generator.
struct ConservationReport {
  unsigned n = 0;
  unsigned m = 0;
  int threshold = 0;
  DiffPoly flux;  // Res [ (L^*m)_{>=threshold}, L^*n ]
  std::vector<ConservationVerdict> verdicts;

  bool all_conserved() const;
};

/// Requires L tracked to depth >= n + m - 1 so the residue of the
/// commutator is exact.
ConservationReport conservation_check(const PSymbol& L, unsigned n,
                                      unsigned m, int threshold);

}  // namespace moyal
