#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace noma {

// mt19937_64 with hand-written output mappings. std::uniform_real_distribution
// and std::normal_distribution are not bit-stable across standard libraries,
// and reproducing a CSV byte for byte matters more here than distribution
// niceties.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t raw() { return eng_(); }

  // Uniform on [0,1) with 53 random bits.
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Box-Muller; the sine twin is cached so draws come in deterministic pairs.
  double normal(double mean, double stddev) {
    if (have_spare_) {
      have_spare_ = false;
      return mean + stddev * spare_;
    }
    double u1 = 1.0 - uniform();  // (0,1], keeps log finite
    double u2 = uniform();
    double mag = std::sqrt(-2.0 * std::log(u1));
    double ang = 2.0 * M_PI * u2;
    spare_ = mag * std::sin(ang);
    have_spare_ = true;
    return mean + stddev * mag * std::cos(ang);
  }

 private:
  std::mt19937_64 eng_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace noma
