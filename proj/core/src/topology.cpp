#include "noma/topology.hpp"

#include <algorithm>
#include <cmath>

#include "noma/errors.hpp"
#include "noma/rng.hpp"
#include "noma/units.hpp"

namespace noma {

Topology generate_topology(const NetworkConfig& cfg) {
  if (cfg.num_ue < 1 || cfg.num_sbs < 0) throw error("topology needs num_ue >= 1, num_sbs >= 0");
  Rng rng(cfg.rng_seed);
  Topology topo;

  int num_bs = cfg.num_sbs + 1;
  topo.bs_pos.resize(num_bs);
  topo.bs_pos[0] = {cfg.area_side / 2.0, cfg.area_side / 2.0};
  for (int b = 1; b < num_bs; ++b) {
    double x = rng.uniform(0.0, cfg.area_side);
    double y = rng.uniform(0.0, cfg.area_side);
    topo.bs_pos[b] = {x, y};
  }

  topo.ue_pos.resize(cfg.num_ue);
  for (int i = 0; i < cfg.num_ue; ++i) {
    double x = rng.uniform(0.0, cfg.area_side);
    double y = rng.uniform(0.0, cfg.area_side);
    topo.ue_pos[i] = {x, y};
  }

  // gain = A * d^-eta * 10^(xi/10); distances under 1 m are clamped so the
  // pathloss model cannot produce gain > A.
  topo.gain.assign(num_bs, std::vector<double>(cfg.num_ue, 0.0));
  for (int b = 0; b < num_bs; ++b) {
    for (int i = 0; i < cfg.num_ue; ++i) {
      double dx = topo.bs_pos[b][0] - topo.ue_pos[i][0];
      double dy = topo.bs_pos[b][1] - topo.ue_pos[i][1];
      double d = std::max(1.0, std::hypot(dx, dy));
      double shadow_db = rng.normal(0.0, cfg.shadowing_stddev);
      topo.gain[b][i] =
          cfg.antenna_constant * std::pow(d, -cfg.pathloss_exponent) * db_to_linear(shadow_db);
    }
  }

  topo.qos.resize(cfg.num_ue);
  for (int i = 0; i < cfg.num_ue; ++i) {
    topo.qos[i] = rng.uniform(0.5 * cfg.qos_mean, 1.5 * cfg.qos_mean);
  }

  associate_ul(topo, cfg);
  return topo;
}

void associate_ul(Topology& topo, const NetworkConfig& cfg) {
  int num_bs = static_cast<int>(topo.gain.size());
  int num_ue = static_cast<int>(topo.qos.size());
  double w_mbs = cfg.bias * dbm_to_watt(cfg.p_mbs);
  double w_sbs = dbm_to_watt(cfg.p_sbs);

  topo.serving_bs.assign(num_ue, 0);
  topo.bs_ues.assign(num_bs, {});
  for (int i = 0; i < num_ue; ++i) {
    int best = 0;
    double best_metric = w_mbs * topo.gain[0][i];
    for (int b = 1; b < num_bs; ++b) {
      double m = w_sbs * topo.gain[b][i];
      if (m > best_metric) {
        best_metric = m;
        best = b;
      }
    }
    topo.serving_bs[i] = best;
    topo.bs_ues[best].push_back(i);
  }
}

}  // namespace noma
