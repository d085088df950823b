#pragma once

#include <array>
#include <vector>

#include "noma/config.hpp"

namespace noma {

struct Topology {
  std::vector<std::array<double, 2>> bs_pos;  // [0] is the MBS at the center
  std::vector<std::array<double, 2>> ue_pos;
  std::vector<std::vector<double>> gain;      // gain[b][i], linear channel gain
  std::vector<double> qos;                    // bps demanded per UE
  std::vector<int> serving_bs;                // per UE, filled by associate_ul
  std::vector<std::vector<int>> bs_ues;       // UE ids per BS, ascending
};

// Drops SBSs and UEs uniformly in the square, draws lognormal shadowing and
// per-UE demands, then associates. Draw order is fixed: SBS positions, UE
// positions, shadowing (BS-major), QoS; identical seeds give identical fields.
Topology generate_topology(const NetworkConfig& cfg);

// Biased DL-pilot association: UE i picks argmax_b w_b * gain[b][i] with
// w_0 = bias * p_mbs and w_b = p_sbs for small cells. Ties go to the lowest
// BS index. bias = p_sbs/p_mbs makes this pure max-gain (decoupled UL).
void associate_ul(Topology& topo, const NetworkConfig& cfg);

}  // namespace noma
