#include "noma/noma_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "noma/errors.hpp"
#include "noma/units.hpp"

namespace noma {

CscVector composite_csc(const std::vector<double>& qos_bps, double sensitivity_db,
                        double theta, double rb_bandwidth) {
  if (theta <= 0.0) throw zero_bandwidth_error();
  CscVector v;
  double sens = db_to_linear(sensitivity_db);  // -inf dB -> 0 linear
  v.qos_sinr.reserve(qos_bps.size());
  v.sensitivity_sinr.reserve(qos_bps.size());
  v.composite.reserve(qos_bps.size());
  for (double r : qos_bps) {
    double q = std::exp2(r / (theta * rb_bandwidth)) - 1.0;
    v.qos_sinr.push_back(q);
    v.sensitivity_sinr.push_back(sens);
    v.composite.push_back(std::max(q, sens));
  }
  return v;
}

void refresh_csc(Cluster& c, const NetworkConfig& cfg) {
  c.csc = composite_csc(c.qos, cfg.sensitivity_db, c.theta, cfg.rb_bandwidth).composite;
}

std::vector<double> sinr(const Cluster& c, const std::vector<double>& omega,
                         double fef, const LinkBudget& lb) {
  size_t k = c.gains.size();
  double rho = normalized_noise(lb, c.theta);
  std::vector<double> recv(k), out(k);
  for (size_t i = 0; i < k; ++i) recv[i] = omega[i] * c.gains[i];

  // Decoding goes strongest-first: member i has members > i still in the air
  // and only fef-residuals of members < i already peeled off.
  for (size_t i = 0; i < k; ++i) {
    double residual = 0.0, pending = 0.0;
    for (size_t j = 0; j < i; ++j) residual += recv[j];
    for (size_t j = i + 1; j < k; ++j) pending += recv[j];
    out[i] = recv[i] / (fef * residual + pending + rho);
  }
  return out;
}

std::vector<double> member_rates(const Cluster& c, const std::vector<double>& sinr_vals,
                                 const LinkBudget& lb) {
  std::vector<double> r(sinr_vals.size());
  for (size_t i = 0; i < sinr_vals.size(); ++i) {
    r[i] = c.theta * lb.rb_bandwidth * std::log2(1.0 + sinr_vals[i]);
  }
  return r;
}

double alpha_fair_objective(const std::vector<double>& rates, double alpha) {
  if (alpha < 0.0 || alpha > 1.0) throw error("alpha outside [0,1]");
  double total = 0.0;
  if (alpha == 0.0) {
    for (double r : rates) total += r - 1.0;
    return total;
  }
  if (alpha == 1.0) {
    for (double r : rates) {
      if (r <= 0.0) throw nonpositive_rate_error();
      total += std::log(std::max(r, 1.0));  // 1 bps floor keeps ln bounded
    }
    return total;
  }
  for (double r : rates) {
    // (r^(1-a) - 1)/(1-a) through expm1: stays accurate as alpha -> 1
    total += std::expm1((1.0 - alpha) * std::log(r)) / (1.0 - alpha);
  }
  return total;
}

std::pair<double, double> asymptotic_gain_bounds(double gain_hi, double gain_lo) {
  if (gain_lo > gain_hi) std::swap(gain_hi, gain_lo);
  double d = 0.5 * (std::log2(gain_hi) - std::log2(gain_lo));
  return {d, -d};
}

double simulate_two_user_gain(double gain_hi, double gain_lo, double rho, double fef,
                              DecodeOrder order) {
  if (gain_lo > gain_hi) std::swap(gain_hi, gain_lo);
  if (fef <= 0.0) fef = std::numeric_limits<double>::min();
  double inv_rho = 1.0 / rho;
  double oma =
      0.5 * (std::log2(1.0 + rho * gain_hi) + std::log2(1.0 + rho * gain_lo));

  // The pair shares one received-power budget: the full-power received power
  // of whichever user anchors the chosen order, and nobody may carry more
  // than half of it once both are admitted at full strength.
  double r_first, r_second;
  if (order == DecodeOrder::ascending) {
    // Stronger user decoded first; budget = gain_hi.
    double recv_lo = std::min(gain_lo, 0.5 * gain_hi);
    double recv_hi = gain_hi - recv_lo;
    r_first = std::log2(1.0 + recv_hi / (recv_lo + inv_rho));
    r_second = std::log2(1.0 + recv_lo / (fef * recv_hi + inv_rho));
  } else {
    // Weaker user decoded first; budget = gain_lo, split in half.
    double recv_hi = 0.5 * gain_lo;
    double recv_lo = gain_lo - recv_hi;
    r_first = std::log2(1.0 + recv_lo / (recv_hi + inv_rho));
    r_second = std::log2(1.0 + recv_hi / (fef * recv_lo + inv_rho));
  }
  return r_first + r_second - oma;
}

}  // namespace noma
