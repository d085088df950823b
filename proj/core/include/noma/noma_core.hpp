#pragma once

#include <utility>
#include <vector>

#include "noma/config.hpp"

namespace noma {

// One uplink NOMA cluster at a BS. Members are kept sorted by descending
// channel gain; index 0 is decoded first and therefore sees every weaker
// member's signal uncancelled, while the last member sees only fef-residuals.
struct Cluster {
  int bs = 0;
  std::vector<int> members;    // UE ids, descending gain order
  std::vector<double> gains;   // linear gains towards `bs`, descending
  std::vector<double> qos;     // bps demands, aligned with members
  std::vector<double> csc;     // SINR floors at the current theta
  double theta = 0.0;          // RB share currently granted
};

// Per-member SINR floors: the QoS-implied floor, the receiver-sensitivity
// floor, and their elementwise max actually enforced by the power solver.
struct CscVector {
  std::vector<double> qos_sinr;
  std::vector<double> sensitivity_sinr;
  std::vector<double> composite;
};

// 2^(R/(theta*W)) - 1 per member, floored at the linear sensitivity SINR.
// Throws zero_bandwidth_error when theta <= 0.
CscVector composite_csc(const std::vector<double>& qos_bps, double sensitivity_db,
                        double theta, double rb_bandwidth);

// Recompute cluster.csc from cluster.qos at cluster.theta.
void refresh_csc(Cluster& c, const NetworkConfig& cfg);

// Post-SIC SINR per member for transmit weights omega in [0,1]:
//   sinr_i = w_i h_i / (fef * sum_{j<i} w_j h_j + sum_{k>i} w_k h_k + rho)
// where rho = normalized_noise(lb, c.theta). Throws zero_bandwidth_error.
std::vector<double> sinr(const Cluster& c, const std::vector<double>& omega,
                         double fef, const LinkBudget& lb);

// R_i = theta * W * log2(1 + sinr_i), bps.
std::vector<double> member_rates(const Cluster& c, const std::vector<double>& sinr_vals,
                                 const LinkBudget& lb);

// Alpha-fair utility of a rate vector (rates in bps):
//   alpha  = 0: sum(R) - count (exactly)
//   0<a<1 : sum((R^(1-a) - 1)/(1-a))
//   alpha  = 1: sum(ln max(R, 1)); throws nonpositive_rate_error on R <= 0.
double alpha_fair_objective(const std::vector<double>& rates, double alpha);

// Closed-form asymptotic per-RB spectral-efficiency deltas of 2-user NOMA
// over orthogonal sharing as SNR -> inf and fef -> 0:
//   ascending decode order: +log2(h_hi/h_lo)/2, descending: the negation.
std::pair<double, double> asymptotic_gain_bounds(double gain_hi, double gain_lo);

enum class DecodeOrder { ascending, descending };

// Simulated 2-user sum-rate delta over orthogonal sharing (bps/Hz) at
// transmit SNR scale rho, with the budgeted power split: total received
// power equals the full-power received power of the last-decoded user and
// no user may carry more than half of it. fef = 0 is mapped to the smallest
// positive double.
double simulate_two_user_gain(double gain_hi, double gain_lo, double rho, double fef,
                              DecodeOrder order);

}  // namespace noma
