#pragma once

#include <cstdint>
#include <limits>
#include <string>

namespace noma {

// Scenario parameters. Defaults are the evaluation baseline used throughout
// the tests: a 500x500 m macro cell with 10 small cells and 100 uplink users.
struct NetworkConfig {
  double area_side = 500.0;        // m, square side; MBS sits at the center
  int num_sbs = 10;                // B small cells (BS index 0 is the MBS)
  int num_ue = 100;                // U
  double pathloss_exponent = 3.76;
  double shadowing_stddev = 4.0;   // dB, lognormal shadowing
  double antenna_constant = 1.0;   // multiplicative gain constant A
  double noise_psd = -174.0;       // dBm/Hz
  double rb_bandwidth = 180e3;     // Hz per resource block
  double num_rbs = 100.0;          // RB budget Theta shared by all cells
  double p_ue_max = 23.0;          // dBm, UE transmit ceiling
  double p_sbs = 30.0;             // dBm, small-cell DL pilot power
  double p_mbs = 46.0;             // dBm, macro DL pilot power
  double bias = 0.025;             // association bias on the MBS pilot
  double fef = 1e-7;               // residual fractional error after SIC
  int max_cluster_size = 10;       // hardware bound on decoding chain depth
  double alpha = 0.0;              // fairness exponent of the objective
  double qos_mean = 1e6;           // bps, mean of the per-UE demand draw
  double sensitivity_db = -std::numeric_limits<double>::infinity();  // receiver floor
  std::uint64_t rng_seed = 1;
};

// Scenario-constant link scalars in linear units, derived once per run.
struct LinkBudget {
  double noise_w_per_rb = 0.0;  // N0 * W, watts of noise in one full RB
  double p_ue_max_w = 0.0;
  double rb_bandwidth = 0.0;    // Hz
};

LinkBudget link_budget(const NetworkConfig& cfg);

// Noise normalized by the UE power ceiling for a share of theta RBs.
// Throws zero_bandwidth_error when theta <= 0.
double normalized_noise(const LinkBudget& lb, double theta);

// Plain-text config files: one `key = value` per line, '#' comments, keys
// named exactly like the struct fields. Unknown keys throw noma::error.
NetworkConfig load_config(const std::string& path);
void apply_config_line(NetworkConfig& cfg, const std::string& key, const std::string& value);

}  // namespace noma
