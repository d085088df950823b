#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "noma/config.hpp"
#include "noma/noma_core.hpp"
#include "noma/power_alloc.hpp"
#include "noma/topology.hpp"

namespace noma {

// proposed*: full-size clustering; basic*: clusters capped at 2; oma: one
// user per orthogonal share. *_perfect solves and evaluates with fef ~ 0;
// *_agnostic picks cases/weights believing fef ~ 0 but is scored at the
// true fef; the plain variants know the true fef throughout.
enum class SchemeKind {
  proposed,
  proposed_perfect,
  proposed_agnostic,
  basic_noma,
  basic_perfect,
  basic_agnostic,
  oma,
};

std::string scheme_name(SchemeKind s);
SchemeKind parse_scheme(const std::string& name);  // throws noma::error

struct RunOptions {
  SchemeKind scheme = SchemeKind::proposed;
  int t_max = 50;
  double conv_tol = 1e-6;     // relative objective change
  int force_cluster_size = 0;  // > 0: skip the size rule, fix every capacity
  bool uniform_bandwidth = false;  // skip the master, theta = budget / #clusters
};

struct IterationRecord {
  int t = 0;
  double objective = 0.0;
  double theta_sum = 0.0;
  std::vector<int> cluster_sizes;
  std::vector<double> thetas;
};

struct AllocationState {
  std::vector<Cluster> clusters;       // network-wide, creation order
  std::vector<PowerSolution> power;    // aligned with clusters
  std::vector<double> ue_rates;        // bps per UE id
  double objective = 0.0;
  int iterations = 0;
  bool converged = false;
  bool outage = false;                 // some UE cannot meet QoS even alone
  int monotone_violations = 0;         // objective decreases between iterations
  int recluster_events = 0;
  long bs_to_ue_messages = 0;          // one per served UE per iteration
  long sbs_to_mbs_messages = 0;        // one per small-cell cluster per iteration
  std::vector<IterationRecord> trace;
};

// Full alternating power/bandwidth optimization for one topology, or the
// single-pass OMA baseline. Deterministic for fixed (topology, cfg, options).
AllocationState run_allocation(const Topology& topo, const NetworkConfig& cfg,
                               const RunOptions& opt);

struct EnergyMetrics {
  double sum_rate = 0.0;       // bps
  double total_power_w = 0.0;  // sum of omega_i * p_ue_max over all UEs
  double energy_efficiency = 0.0;  // bps per watt
};

EnergyMetrics energy_metrics(const AllocationState& st, const NetworkConfig& cfg);

// Per-iteration CSV: t, objective, theta_sum, then size:theta pairs.
void write_trace_csv(std::ostream& os, const AllocationState& st);

}  // namespace noma
