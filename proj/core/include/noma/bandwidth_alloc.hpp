#pragma once

#include <vector>

namespace noma {

// Concave bandwidth master problem over clusters:
//   maximize sum_c sum_i pi_alpha(theta_c * density[c][i])
//   s.t. theta_c >= theta_lo[c], sum_c theta_c = budget
// density[c][i] is member i's bps per RB at the current powers, theta_lo[c]
// the smallest share meeting the cluster's QoS at those powers.
struct MasterInstance {
  std::vector<std::vector<double>> density;  // bps/RB, all entries > 0
  std::vector<double> theta_lo;
  double budget = 0.0;
};

// Water-level solution. alpha = 0 degenerates to an LP whose corner puts all
// slack on the cluster with the largest summed density (ties: lowest index);
// alpha in (0,1] bisects the dual water level nu with clamped shares
//   theta_c = max(theta_lo[c], (s_c / nu)^(1/alpha)),  s_c = sum_i d_ci^(1-alpha)
// to budget residual 1e-10, then polishes the active set so the budget binds
// exactly. Throws budget_infeasible_error when sum(theta_lo) > budget.
std::vector<double> solve_master(const MasterInstance& mi, double alpha);

}  // namespace noma
