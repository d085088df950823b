#include "noma/sweep.hpp"

#include <algorithm>
#include <ostream>

#include "noma/csv.hpp"
#include "noma/errors.hpp"
#include "noma/topology.hpp"

namespace noma {

std::string sweep_variable_name(SweepVariable v) {
  switch (v) {
    case SweepVariable::fef: return "fef";
    case SweepVariable::kbar: return "kbar";
    case SweepVariable::beta: return "beta";
    case SweepVariable::num_sbs: return "num_sbs";
    case SweepVariable::num_ue: return "num_ue";
  }
  return "unknown";
}

SweepVariable parse_sweep_variable(const std::string& name) {
  for (SweepVariable v : {SweepVariable::fef, SweepVariable::kbar, SweepVariable::beta,
                          SweepVariable::num_sbs, SweepVariable::num_ue}) {
    if (sweep_variable_name(v) == name) return v;
  }
  throw error("unknown sweep variable: " + name);
}

namespace {

NetworkConfig with_value(const NetworkConfig& base, SweepVariable v, double val) {
  NetworkConfig cfg = base;
  switch (v) {
    case SweepVariable::fef: cfg.fef = val; break;
    case SweepVariable::kbar: cfg.max_cluster_size = static_cast<int>(val); break;
    case SweepVariable::beta: cfg.bias = val; break;
    case SweepVariable::num_sbs: cfg.num_sbs = static_cast<int>(val); break;
    case SweepVariable::num_ue: cfg.num_ue = static_cast<int>(val); break;
  }
  return cfg;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec, double alpha,
                                const NetworkConfig& base) {
  if (spec.grid.empty()) throw error("empty sweep grid");
  if (spec.schemes.empty()) throw error("no schemes selected");
  std::vector<SweepRow> rows;
  for (SchemeKind scheme : spec.schemes) {
    for (double gv : spec.grid) {
      for (int s = 0; s < spec.num_seeds; ++s) {
        NetworkConfig cfg = with_value(base, spec.variable, gv);
        cfg.alpha = alpha;
        cfg.rng_seed = base.rng_seed + static_cast<std::uint64_t>(s);
        Topology topo = generate_topology(cfg);
        RunOptions opt;
        opt.scheme = scheme;
        AllocationState st = run_allocation(topo, cfg, opt);
        SweepRow row;
        row.scheme = scheme;
        row.alpha = alpha;
        row.grid_value = gv;
        row.seed = cfg.rng_seed;
        row.objective = st.objective;
        row.outage = st.outage;
        rows.push_back(row);
      }
    }
  }
  std::vector<double> objs(rows.size());
  for (size_t i = 0; i < rows.size(); ++i) objs[i] = rows[i].objective;
  std::vector<double> scaled = feature_scale(objs);
  for (size_t i = 0; i < rows.size(); ++i) rows[i].normalized = scaled[i];
  return rows;
}

std::vector<double> feature_scale(const std::vector<double>& values) {
  std::vector<double> out(values.size(), 0.0);
  if (values.empty()) return out;
  double lo = *std::min_element(values.begin(), values.end());
  double hi = *std::max_element(values.begin(), values.end());
  if (hi <= lo) return out;  // flat batch scales to zeros
  for (size_t i = 0; i < values.size(); ++i) out[i] = (values[i] - lo) / (hi - lo);
  return out;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "scheme,alpha,grid_value,seed,objective,normalized,outage\n";
  for (const SweepRow& r : rows) {
    os << scheme_name(r.scheme) << ',' << format_double(r.alpha) << ','
       << format_double(r.grid_value) << ',' << r.seed << ','
       << format_double(r.objective) << ',' << format_double(r.normalized) << ','
       << (r.outage ? 1 : 0) << '\n';
  }
}

}  // namespace noma
