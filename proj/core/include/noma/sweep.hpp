#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "noma/config.hpp"
#include "noma/orchestrator.hpp"

namespace noma {

// Scenario variables that can be swept from the CLI.
enum class SweepVariable { fef, kbar, beta, num_sbs, num_ue };

std::string sweep_variable_name(SweepVariable v);
SweepVariable parse_sweep_variable(const std::string& name);  // throws noma::error

struct SweepSpec {
  SweepVariable variable = SweepVariable::fef;
  std::vector<double> grid;
  std::vector<double> alphas = {0.0};
  std::vector<SchemeKind> schemes;
  int num_seeds = 20;  // seeds are base.rng_seed .. base.rng_seed + num_seeds - 1
};

struct SweepRow {
  SchemeKind scheme;
  double alpha = 0.0;
  double grid_value = 0.0;
  std::uint64_t seed = 0;
  double objective = 0.0;
  double normalized = 0.0;
  bool outage = false;
};

// Rows for a single alpha, in (scheme, grid, seed) loop order, with
// `normalized` feature-scaled across the whole batch.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, double alpha,
                                const NetworkConfig& base);

// Min-max scaling to [0,1]; an all-equal batch maps to all zeros.
std::vector<double> feature_scale(const std::vector<double>& values);

// Header: scheme,alpha,grid_value,seed,objective,normalized,outage.
// Doubles are printed with %.17g so reruns are byte-identical.
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

}  // namespace noma
