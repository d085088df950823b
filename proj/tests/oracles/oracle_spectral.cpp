#include "oracles/oracle_spectral.hpp"

#include <cmath>

namespace oracle {

double spectral_radius(const std::vector<std::vector<double>>& f) {
  size_t n = f.size();
  if (n == 0) return 0.0;
  std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n))), w(n, 0.0);
  double lambda = 0.0;
  for (int it = 0; it < 200000; ++it) {
    for (size_t i = 0; i < n; ++i) {
      double s = v[i];  // the +I shift
      for (size_t j = 0; j < n; ++j) s += f[i][j] * v[j];
      w[i] = s;
    }
    double rayleigh = 0.0, norm = 0.0;
    for (size_t i = 0; i < n; ++i) {
      rayleigh += v[i] * w[i];
      norm += w[i] * w[i];
    }
    norm = std::sqrt(norm);
    if (norm == 0.0) return 0.0;
    for (size_t i = 0; i < n; ++i) v[i] = w[i] / norm;
    if (it > 2 && std::abs(rayleigh - lambda) <= 1e-14 * std::max(1.0, std::abs(rayleigh))) {
      lambda = rayleigh;
      break;
    }
    lambda = rayleigh;
  }
  return lambda - 1.0;
}

}  // namespace oracle
