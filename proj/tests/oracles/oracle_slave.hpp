#pragma once

#include <vector>

namespace oracle {

struct GridSlaveResult {
  bool feasible = false;
  double utility = 0.0;
  std::vector<double> omega;
};

// Brute-force certificate for the per-cluster power search: walks a uniform
// grid over [0,1]^k (resolution points per axis, k <= 4), keeps the best
// weight vector that satisfies every SINR floor to relative 1e-9, then does
// one refinement pass of the same resolution in a one-cell window around the
// winner. The all-floors-binding weight vector from an independent dense
// solve is added as a candidate so thin feasible regions cannot be missed.
// Everything (SINR, rates, utility) is computed from scratch here.
GridSlaveResult grid_slave(const std::vector<double>& gains, const std::vector<double>& csc,
                           double theta, double rb_bandwidth, double noise_w_per_rb,
                           double p_max_w, double fef, double alpha, int resolution);

}  // namespace oracle
