#pragma once

#include <utility>
#include <vector>

namespace noma {

// Feasible cluster-size bracket. k_min/k_max are the rounded bounds, the
// *_real fields keep the raw formula values for surface plots, and k_star is
// the size the formation stage consumes.
struct SizeBracket {
  double k_min_real = 0.0;
  double k_max_real = 0.0;
  int k_min = 0;
  int k_max = 0;
  int k_star = 0;
};

// K x K SIC interference structure: 1 above the diagonal (not yet decoded),
// fef below it (cancellation residue), 0 on it.
std::vector<std::vector<double>> interference_matrix(int k, double fef);

// Spectral feasibility of a floor vector: feasible iff the spectral radius of
// diag(csc) * interference_matrix is < 1. Returns {feasible, radius}.
std::pair<bool, double> spectral_feasible(const std::vector<double>& csc, double fef);

// Size bracket for a heterogeneous floor vector, driven by its extremes:
//   k_min = ceil(ln fef / ln((1+fef*max)/(1+max))), k_max the floor analogue
// with the min. k_star = k_min. Throws degenerate_fef_error outside (0,1).
SizeBracket cluster_size_unconstrained(const std::vector<double>& csc, double fef);

// Largest K with identical floors csc that stays spectrally feasible:
// floor(ln fef / ln((1+fef*csc)/(1+csc))). Always >= 1.
int identical_demand_size(double csc, double fef);

// Inverse of the above: the largest identical floor supportable by exactly k
// members. Returns +inf for k = 1.
double attainable_sinr(int k, double fef);

// Pareto-minimal normalized powers meeting all floors with equality, from the
// telescoped closed form (not a linear solve). noise_w is the absolute noise
// power sigma^2 for the cluster's share. Throws infeasible_csc_error when the
// floors are spectrally infeasible.
std::vector<double> pareto_powers(const std::vector<double>& csc, double fef, double noise_w);

// Identical-floor geometric special case of pareto_powers.
std::vector<double> pareto_powers_identical(double csc, double fef, double noise_w, int k);

// Size bracket under a transmit power ceiling p_max_w: gain_best is the
// strongest candidate member's channel gain, gain_worst the weakest's.
// k_min comes from the weakest member's budget, k_max from the strongest's;
// k_star = k_min. Throws outage_error when even the weakest member alone
// cannot afford the floor, degenerate_fef_error outside (0,1).
SizeBracket cluster_size_constrained(double csc, double fef, double noise_w,
                                     double p_max_w, double gain_best, double gain_worst);

}  // namespace noma
