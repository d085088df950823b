#pragma once

#include <cstdint>
#include <vector>

#include "noma/config.hpp"
#include "noma/noma_core.hpp"

namespace noma {

// One KKT corner case: bit i set means member i sits on its SINR floor
// ("floored"), clear means it transmits at full weight 1 ("capped").
struct KktCase {
  std::uint32_t floored_mask = 0;
  int k = 0;
};

struct PowerSolution {
  bool feasible = false;
  KktCase kase;
  std::vector<double> omega;  // empty when no case is feasible
  std::vector<double> sinr;
  std::vector<double> rates;  // bps
  double utility = 0.0;       // alpha-fair value of `rates`
};

// Counts corner cases evaluated by solve_slave; tests assert the 2^K cost.
extern thread_local std::uint64_t slave_cases_evaluated;

// Closed-form weights for one corner case: capped members get omega = 1 and
// the floored chain is resolved by a two-term forward recurrence anchored at
// the highest-gain floored member. Returns an empty vector when the anchor
// denominator is nonpositive (case infeasible).
std::vector<double> closed_form_weights(const KktCase& kase, const Cluster& c,
                                        double fef, const LinkBudget& lb);

// Validity of a candidate corner: floored members inside [0,1] (tolerance
// 1e-12 gets clipped in place), capped members meet their floor to relative
// 1e-9.
bool check_necessary_conditions(const KktCase& kase, std::vector<double>& omega,
                                const Cluster& c, double fef, const LinkBudget& lb);

// Evaluate fixed weights at a (possibly different) fef: SINRs, rates and
// alpha-fair utility. Used both by the case search and by the SIC-agnostic
// schemes that pick weights under an optimistic fef.
PowerSolution evaluate_weights(const Cluster& c, const std::vector<double>& omega,
                               double fef, double alpha, const LinkBudget& lb);

// Exhaustive corner search: all 2^K label assignments in binary-counting
// order, keeping the feasible case with the best utility (ties prefer fewer
// floored members). Returns feasible = false when no corner survives.
PowerSolution solve_slave(const Cluster& c, double fef, double alpha, const LinkBudget& lb);

// All 2^K corner candidates with their feasibility and utility, for debugging
// and CSV dumps. Infeasible corners carry the raw weights when they exist.
std::vector<PowerSolution> enumerate_slave_cases(const Cluster& c, double fef,
                                                 double alpha, const LinkBudget& lb);

}  // namespace noma
