#pragma once

#include <stdexcept>

namespace noma {

// Base class for every typed error thrown by the library. The what() strings
// are stable and matched by callers (and tests), so do not reword them.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// theta = 0 RBs: SINR and rate are undefined without spectrum.
struct zero_bandwidth_error final : error {
  zero_bandwidth_error() : error("zero bandwidth") {}
};

// alpha = 1 objective hit a rate <= 0.
struct nonpositive_rate_error final : error {
  nonpositive_rate_error() : error("log of nonpositive rate") {}
};

// fef outside (0,1); at fef = 1 the size formulas divide by log(1).
struct degenerate_fef_error final : error {
  degenerate_fef_error() : error("degenerate FEF") {}
};

// SINR demands spectrally infeasible: no finite power vector meets them.
struct infeasible_csc_error final : error {
  infeasible_csc_error() : error("infeasible CSC") {}
};

// Power-limited user cannot reach its demand even alone.
struct outage_error final : error {
  outage_error() : error("outage") {}
};

// Sum of per-cluster bandwidth lower bounds exceeds the RB budget.
struct budget_infeasible_error final : error {
  budget_infeasible_error() : error("budget infeasible") {}
};

}  // namespace noma
