#include "noma/bandwidth_alloc.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "noma/errors.hpp"

namespace noma {

namespace {

size_t argmax_density(const std::vector<double>& sums) {
  size_t best = 0;
  for (size_t c = 1; c < sums.size(); ++c) {
    if (sums[c] > sums[best]) best = c;
  }
  return best;
}

}  // namespace

std::vector<double> solve_master(const MasterInstance& mi, double alpha) {
  size_t n = mi.density.size();
  if (n == 0 || mi.theta_lo.size() != n) throw error("master: bad instance shape");
  if (alpha < 0.0 || alpha > 1.0) throw error("alpha outside [0,1]");

  double lo_sum = 0.0;
  for (double lo : mi.theta_lo) {
    if (lo < 0.0) throw error("master: negative theta_lo");
    lo_sum += lo;
  }
  if (lo_sum > mi.budget + 1e-12 * std::max(1.0, mi.budget)) {
    throw budget_infeasible_error();
  }
  double slack = std::max(0.0, mi.budget - lo_sum);

  std::vector<double> dsum(n, 0.0);
  for (size_t c = 0; c < n; ++c) {
    for (double d : mi.density[c]) {
      if (!(d > 0.0)) throw error("master: nonpositive density");
      dsum[c] += d;
    }
  }

  if (alpha == 0.0) {
    // Linear objective: the whole slack belongs to the densest cluster.
    std::vector<double> theta = mi.theta_lo;
    theta[argmax_density(dsum)] += slack;
    return theta;
  }

  // s_c = sum_i d_ci^(1-alpha); at alpha = 1 that is just the member count.
  std::vector<double> s(n, 0.0), s_inv_alpha(n, 0.0);
  for (size_t c = 0; c < n; ++c) {
    if (alpha == 1.0) {
      s[c] = static_cast<double>(mi.density[c].size());
    } else {
      for (double d : mi.density[c]) s[c] += std::pow(d, 1.0 - alpha);
    }
    s_inv_alpha[c] = std::pow(s[c], 1.0 / alpha);
  }

  std::vector<double> theta(n, 0.0);
  if (slack < 1e-15 * std::max(1.0, mi.budget)) {
    theta = mi.theta_lo;
    theta[argmax_density(dsum)] += slack;
    return theta;
  }

  // Dual bisection on the water level nu; total share is decreasing in nu.
  auto total = [&](double nu) {
    double t = 0.0;
    for (size_t c = 0; c < n; ++c) {
      t += std::max(mi.theta_lo[c], std::pow(s[c] / nu, 1.0 / alpha));
    }
    return t;
  };

  double s_root_sum = 0.0;
  for (size_t c = 0; c < n; ++c) s_root_sum += s_inv_alpha[c];
  double nu = std::pow(s_root_sum / mi.budget, alpha);  // exact when nothing clamps
  double nu_lo = nu, nu_hi = nu;
  while (total(nu_hi) > mi.budget && nu_hi < 1e300) nu_hi *= 2.0;
  while (total(nu_lo) < mi.budget && nu_lo > 1e-300) nu_lo /= 2.0;
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (nu_lo + nu_hi);
    double t = total(mid);
    if (std::abs(t - mi.budget) <= 1e-10 * std::max(1.0, mi.budget)) {
      nu = mid;
      break;
    }
    if (t > mi.budget) nu_lo = mid;
    else nu_hi = mid;
    nu = mid;
  }

  // Polish: freeze the clamp set implied by nu, then redistribute exactly;
  // clamping is monotone so this settles in at most n passes.
  std::vector<char> clamped(n, 0);
  for (size_t c = 0; c < n; ++c) {
    clamped[c] = std::pow(s[c] / nu, 1.0 / alpha) <= mi.theta_lo[c];
  }
  for (size_t pass = 0; pass <= n; ++pass) {
    double lo_clamped = 0.0, root_sum = 0.0;
    for (size_t c = 0; c < n; ++c) {
      if (clamped[c]) lo_clamped += mi.theta_lo[c];
      else root_sum += s_inv_alpha[c];
    }
    if (root_sum <= 0.0) break;
    double free_budget = mi.budget - lo_clamped;
    bool changed = false;
    for (size_t c = 0; c < n; ++c) {
      if (clamped[c]) continue;
      double t = s_inv_alpha[c] * free_budget / root_sum;
      if (t < mi.theta_lo[c]) {
        clamped[c] = 1;
        changed = true;
      }
    }
    if (!changed) {
      for (size_t c = 0; c < n; ++c) {
        theta[c] = clamped[c] ? mi.theta_lo[c]
                              : s_inv_alpha[c] * free_budget / root_sum;
      }
      return theta;
    }
  }

  // Everything clamped: hand the slack to the densest cluster.
  theta = mi.theta_lo;
  theta[argmax_density(dsum)] += slack;
  return theta;
}

}  // namespace noma
