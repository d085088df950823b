#include "noma/power_alloc.hpp"

#include <bit>
#include <cmath>
#include <limits>

#include "noma/errors.hpp"

namespace noma {

thread_local std::uint64_t slave_cases_evaluated = 0;

std::vector<double> closed_form_weights(const KktCase& kase, const Cluster& c,
                                        double fef, const LinkBudget& lb) {
  int k = kase.k;
  double rho = normalized_noise(lb, c.theta);
  const auto& h = c.gains;
  const auto& g = c.csc;

  std::vector<double> omega(k, 1.0);
  std::vector<int> floored;
  for (int i = 0; i < k; ++i) {
    if (kase.floored_mask >> i & 1u) floored.push_back(i);
  }
  if (floored.empty()) return omega;

  // Along the floored chain every weight is affine in the first (strongest)
  // floored member's weight: omega_i = A_i * w0 + B_i. Consecutive floored
  // members' binding equations telescope into a two-term recurrence; capped
  // members sandwiched between them enter through b.
  int mind = floored[0];
  std::vector<double> A(k, 0.0), B(k, 0.0);
  A[mind] = 1.0;
  for (size_t t = 1; t < floored.size(); ++t) {
    int prev = floored[t - 1], i = floored[t];
    double denom = h[i] * (1.0 + 1.0 / g[i]);
    double a = h[prev] * (fef + 1.0 / g[prev]) / denom;
    double capped_between = 0.0;
    for (int j = prev + 1; j < i; ++j) {
      if (!(kase.floored_mask >> j & 1u)) capped_between += h[j];
    }
    double b = (fef - 1.0) * capped_between / denom;
    A[i] = a * A[prev];
    B[i] = a * B[prev] + b;
  }

  // Anchor: the first floored member's own binding equation, with everything
  // below it substituted through (A, B) and capped members at weight 1.
  double capped_before = 0.0, capped_after = 0.0;
  for (int j = 0; j < mind; ++j) {
    if (!(kase.floored_mask >> j & 1u)) capped_before += h[j];
  }
  for (int j = mind + 1; j < k; ++j) {
    if (!(kase.floored_mask >> j & 1u)) capped_after += h[j];
  }
  double num = fef * capped_before + capped_after + rho;
  double den = h[mind] / g[mind];
  for (size_t t = 1; t < floored.size(); ++t) {
    int i = floored[t];
    num += B[i] * h[i];
    den -= A[i] * h[i];
  }
  if (!(den > 0.0)) return {};  // anchor degenerate: this corner cannot bind

  double w0 = num / den;
  for (int i : floored) omega[i] = A[i] * w0 + B[i];
  return omega;
}

bool check_necessary_conditions(const KktCase& kase, std::vector<double>& omega,
                                const Cluster& c, double fef, const LinkBudget& lb) {
  int k = kase.k;
  for (int i = 0; i < k; ++i) {
    if (!(kase.floored_mask >> i & 1u)) continue;
    if (omega[i] < 0.0) {
      if (omega[i] > -1e-12) omega[i] = 0.0;
      else return false;
    } else if (omega[i] > 1.0) {
      if (omega[i] < 1.0 + 1e-12) omega[i] = 1.0;
      else return false;
    }
  }
  std::vector<double> s = sinr(c, omega, fef, lb);
  for (int i = 0; i < k; ++i) {
    if (s[i] < c.csc[i] * (1.0 - 1e-9)) return false;
  }
  return true;
}

PowerSolution evaluate_weights(const Cluster& c, const std::vector<double>& omega,
                               double fef, double alpha, const LinkBudget& lb) {
  PowerSolution sol;
  sol.kase.k = static_cast<int>(c.gains.size());
  sol.omega = omega;
  sol.sinr = sinr(c, omega, fef, lb);
  sol.rates = member_rates(c, sol.sinr, lb);
  bool dead = false;
  if (alpha == 1.0) {
    for (double r : sol.rates) {
      if (r <= 0.0) dead = true;  // ln objective would reject this outright
    }
  }
  sol.utility = dead ? -std::numeric_limits<double>::infinity()
                     : alpha_fair_objective(sol.rates, alpha);
  return sol;
}

PowerSolution solve_slave(const Cluster& c, double fef, double alpha, const LinkBudget& lb) {
  int k = static_cast<int>(c.gains.size());
  if (k < 1) throw error("empty cluster");
  if (k > 20) throw error("cluster too large for corner enumeration");

  PowerSolution best;
  best.kase.k = k;
  best.utility = -std::numeric_limits<double>::infinity();
  int best_pop = k + 1;

  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    ++slave_cases_evaluated;
    KktCase kase{mask, k};
    std::vector<double> w = closed_form_weights(kase, c, fef, lb);
    if (w.empty()) continue;
    if (!check_necessary_conditions(kase, w, c, fef, lb)) continue;
    PowerSolution sol = evaluate_weights(c, w, fef, alpha, lb);
    sol.kase = kase;
    sol.feasible = true;
    int pop = std::popcount(mask);
    if (!best.feasible || sol.utility > best.utility ||
        (sol.utility == best.utility && pop < best_pop)) {
      best = std::move(sol);
      best_pop = pop;
    }
  }
  return best;  // feasible = false means no corner survived
}

std::vector<PowerSolution> enumerate_slave_cases(const Cluster& c, double fef,
                                                 double alpha, const LinkBudget& lb) {
  int k = static_cast<int>(c.gains.size());
  if (k < 1 || k > 20) throw error("cluster size outside enumeration range");
  std::vector<PowerSolution> all;
  all.reserve(size_t{1} << k);
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    KktCase kase{mask, k};
    std::vector<double> w = closed_form_weights(kase, c, fef, lb);
    if (w.empty()) {
      PowerSolution sol;
      sol.kase = kase;
      sol.utility = -std::numeric_limits<double>::infinity();
      all.push_back(std::move(sol));
      continue;
    }
    std::vector<double> checked = w;
    bool ok = check_necessary_conditions(kase, checked, c, fef, lb);
    PowerSolution sol = evaluate_weights(c, ok ? checked : w, fef, alpha, lb);
    sol.kase = kase;
    sol.feasible = ok;
    all.push_back(std::move(sol));
  }
  return all;
}

}  // namespace noma
