#include "noma/cluster_size.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>

#include "noma/errors.hpp"

namespace noma {

namespace {

void require_fef_open_interval(double fef) {
  if (!(fef > 0.0) || !(fef < 1.0)) throw degenerate_fef_error();
}

// Real-valued size supportable with identical floors csc:
//   ln(fef) / ln((1 + fef*csc) / (1 + csc)),  >= 1 for any csc > 0.
double size_real(double csc, double fef) {
  return std::log(fef) / std::log((1.0 + fef * csc) / (1.0 + csc));
}

}  // namespace

std::vector<std::vector<double>> interference_matrix(int k, double fef) {
  std::vector<std::vector<double>> h(k, std::vector<double>(k, 0.0));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i < j) h[i][j] = 1.0;       // decoded after i: full interference
      else if (i > j) h[i][j] = fef;  // decoded before i: residual only
    }
  }
  return h;
}

std::pair<bool, double> spectral_feasible(const std::vector<double>& csc, double fef) {
  require_fef_open_interval(fef);
  int k = static_cast<int>(csc.size());
  if (k <= 1) return {true, 0.0};
  Eigen::MatrixXd f(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      double h = (i == j) ? 0.0 : (i < j ? 1.0 : fef);
      f(i, j) = csc[i] * h;
    }
  }
  Eigen::EigenSolver<Eigen::MatrixXd> es(f, /*computeEigenvectors=*/false);
  double radius = es.eigenvalues().cwiseAbs().maxCoeff();
  return {radius < 1.0, radius};
}

SizeBracket cluster_size_unconstrained(const std::vector<double>& csc, double fef) {
  require_fef_open_interval(fef);
  if (csc.empty()) throw error("empty CSC vector");
  double cmax = *std::max_element(csc.begin(), csc.end());
  double cmin = *std::min_element(csc.begin(), csc.end());
  SizeBracket b;
  b.k_min_real = size_real(cmax, fef);
  b.k_max_real = size_real(cmin, fef);
  b.k_min = static_cast<int>(std::ceil(b.k_min_real));
  b.k_max = static_cast<int>(std::floor(b.k_max_real));
  b.k_star = b.k_min;
  return b;
}

int identical_demand_size(double csc, double fef) {
  require_fef_open_interval(fef);
  if (!(csc > 0.0)) throw error("CSC must be positive");
  return std::max(1, static_cast<int>(std::floor(size_real(csc, fef))));
}

double attainable_sinr(int k, double fef) {
  require_fef_open_interval(fef);
  if (k < 1) throw error("cluster size must be >= 1");
  if (k == 1) return std::numeric_limits<double>::infinity();
  double t = std::pow(fef, 1.0 / k);  // the feasibility boundary has q = t
  return (t - 1.0) / (fef - t);
}

std::vector<double> pareto_powers(const std::vector<double>& csc, double fef, double noise_w) {
  require_fef_open_interval(fef);
  size_t k = csc.size();
  if (k == 0) throw error("empty CSC vector");

  // Chain ratio between consecutive members' received powers when every
  // floor binds; prod[i] carries the telescoped product up to member i.
  std::vector<double> prod(k, 1.0);
  for (size_t i = 1; i < k; ++i) {
    double q = (1.0 + fef * csc[i - 1]) / (1.0 + csc[i]);
    prod[i] = prod[i - 1] * q;
  }
  double den = 1.0;
  for (size_t i = 1; i < k; ++i) den -= csc[i] * prod[i];
  if (!(den > 0.0)) throw infeasible_csc_error();

  std::vector<double> p(k);
  p[0] = csc[0] * noise_w / den;
  for (size_t i = 1; i < k; ++i) p[i] = p[0] * (csc[i] / csc[0]) * prod[i];
  return p;
}

std::vector<double> pareto_powers_identical(double csc, double fef, double noise_w, int k) {
  require_fef_open_interval(fef);
  if (k < 1) throw error("cluster size must be >= 1");
  double q = (1.0 + fef * csc) / (1.0 + csc);
  double beta0 = (1.0 + fef * csc) / (1.0 - fef);
  double den = 1.0 - beta0 + beta0 * std::pow(q, k - 1);
  if (!(den > 0.0)) throw infeasible_csc_error();
  std::vector<double> p(k);
  for (int i = 0; i < k; ++i) p[i] = std::pow(q, i) * csc * noise_w / den;
  return p;
}

SizeBracket cluster_size_constrained(double csc, double fef, double noise_w,
                                     double p_max_w, double gain_best, double gain_worst) {
  require_fef_open_interval(fef);
  if (!(csc > 0.0)) throw error("CSC must be positive");
  double q = (1.0 + fef * csc) / (1.0 + csc);
  double ln_q = std::log(q);
  double beta0 = (1.0 + fef * csc) / (1.0 - fef);
  double tail = fef * (1.0 + csc) / (1.0 - fef);  // = beta0 - 1

  // Weakest member's transmit budget caps the size from below the bracket:
  // received power q^(K-1) * csc * noise / D(K) must fit in p_max * gain.
  double margin_worst = beta0 - csc * noise_w / (p_max_w * gain_worst);
  if (!(margin_worst > 0.0)) throw outage_error();

  SizeBracket b;
  b.k_min_real = 1.0 + (std::log(tail) - std::log(margin_worst)) / ln_q;
  b.k_max_real =
      1.0 + (std::log(csc * noise_w / (p_max_w * gain_best) + tail) - std::log(beta0)) / ln_q;
  b.k_min = static_cast<int>(std::floor(b.k_min_real));
  b.k_max = static_cast<int>(std::ceil(b.k_max_real));
  if (b.k_min < 1) throw outage_error();
  b.k_star = b.k_min;
  return b;
}

}  // namespace noma
