// Scenario driver for the uplink NOMA HetNet library: parameter sweeps to
// CSV, single-run traces, cluster-size surfaces and per-corner power dumps.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "noma/cluster_size.hpp"
#include "noma/config.hpp"
#include "noma/csv.hpp"
#include "noma/errors.hpp"
#include "noma/orchestrator.hpp"
#include "noma/power_alloc.hpp"
#include "noma/sweep.hpp"
#include "noma/units.hpp"

namespace {

void add_config_options(CLI::App& app, noma::NetworkConfig& cfg) {
  app.add_option("--area-side", cfg.area_side, "square side, m");
  app.add_option("--num-sbs", cfg.num_sbs, "small cells");
  app.add_option("--num-ue", cfg.num_ue, "uplink users");
  app.add_option("--pathloss-exponent", cfg.pathloss_exponent);
  app.add_option("--shadowing-stddev", cfg.shadowing_stddev, "dB");
  app.add_option("--antenna-constant", cfg.antenna_constant);
  app.add_option("--noise-psd", cfg.noise_psd, "dBm/Hz");
  app.add_option("--rb-bandwidth", cfg.rb_bandwidth, "Hz");
  app.add_option("--num-rbs", cfg.num_rbs, "RB budget");
  app.add_option("--p-ue-max", cfg.p_ue_max, "dBm");
  app.add_option("--p-sbs", cfg.p_sbs, "dBm");
  app.add_option("--p-mbs", cfg.p_mbs, "dBm");
  app.add_option("--bias", cfg.bias, "association bias on the MBS pilot");
  app.add_option("--fef", cfg.fef, "residual error factor after SIC");
  app.add_option("--max-cluster-size", cfg.max_cluster_size);
  app.add_option("--alpha", cfg.alpha, "fairness exponent");
  app.add_option("--qos-mean", cfg.qos_mean, "bps");
  app.add_option("--sensitivity-db", cfg.sensitivity_db, "receiver floor, dB");
  app.add_option("--rng-seed", cfg.rng_seed);
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw noma::error("cannot open " + path + " for writing");
  return f;
}

std::string join(const std::vector<double>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ';';
    s += noma::format_double(v[i]);
  }
  return s;
}

int do_sweep(const noma::NetworkConfig& cfg, const std::string& variable,
             const std::vector<double>& grid, const std::vector<double>& alphas,
             const std::vector<std::string>& scheme_names, int seeds,
             const std::string& out_dir) {
  noma::SweepSpec spec;
  spec.variable = noma::parse_sweep_variable(variable);
  spec.grid = grid;
  spec.num_seeds = seeds;
  if (scheme_names.empty()) {
    spec.schemes = {noma::SchemeKind::proposed, noma::SchemeKind::basic_noma,
                    noma::SchemeKind::oma};
  } else {
    for (const auto& n : scheme_names) spec.schemes.push_back(noma::parse_scheme(n));
  }
  std::filesystem::create_directories(out_dir);
  for (double alpha : alphas.empty() ? std::vector<double>{cfg.alpha} : alphas) {
    auto rows = noma::run_sweep(spec, alpha, cfg);
    std::string path = out_dir + "/sweep_" + variable + "_alpha" +
                       noma::format_double(alpha) + ".csv";
    auto f = open_out(path);
    noma::write_sweep_csv(f, rows);
    std::cout << path << ": " << rows.size() << " rows\n";
  }
  return 0;
}

int do_run(const noma::NetworkConfig& cfg, const std::string& scheme,
           const std::string& trace_path, int force_size, bool uniform_bw) {
  auto topo = noma::generate_topology(cfg);
  noma::RunOptions opt;
  opt.scheme = noma::parse_scheme(scheme);
  opt.force_cluster_size = force_size;
  opt.uniform_bandwidth = uniform_bw;
  auto st = noma::run_allocation(topo, cfg, opt);
  auto em = noma::energy_metrics(st, cfg);

  std::cout << "scheme            " << scheme << "\n"
            << "objective         " << noma::format_double(st.objective) << "\n"
            << "iterations        " << st.iterations << (st.converged ? "" : " (hit cap)")
            << "\n"
            << "clusters          " << st.clusters.size() << "\n"
            << "outage            " << (st.outage ? "yes" : "no") << "\n"
            << "recluster events  " << st.recluster_events << "\n"
            << "objective dips    " << st.monotone_violations << "\n"
            << "bs->ue messages   " << st.bs_to_ue_messages << "\n"
            << "sbs->mbs messages " << st.sbs_to_mbs_messages << "\n"
            << "sum rate          " << noma::format_double(em.sum_rate) << " bps\n"
            << "tx power          " << noma::format_double(em.total_power_w) << " W\n"
            << "energy efficiency " << noma::format_double(em.energy_efficiency)
            << " bps/W\n";
  if (!trace_path.empty()) {
    auto f = open_out(trace_path);
    noma::write_trace_csv(f, st);
    std::cout << "trace             " << trace_path << "\n";
  }
  return 0;
}

int do_cluster_size(const noma::NetworkConfig& cfg, const std::vector<double>& fefs,
                    std::vector<double> floors, const std::vector<double>& rates,
                    double theta, const std::string& out_path) {
  for (double r : rates) {
    floors.push_back(
        noma::composite_csc({r}, cfg.sensitivity_db, theta, cfg.rb_bandwidth).composite[0]);
  }
  if (floors.empty()) throw noma::error("cluster-size: no --floor or --rate values");
  auto f = open_out(out_path);
  f << "fef,floor,size_real,size\n";
  for (double fef : fefs) {
    for (double g : floors) {
      auto b = noma::cluster_size_unconstrained({g}, fef);
      f << noma::format_double(fef) << ',' << noma::format_double(g) << ','
        << noma::format_double(b.k_max_real) << ',' << noma::identical_demand_size(g, fef)
        << '\n';
    }
  }
  std::cout << out_path << ": " << fefs.size() * floors.size() << " rows\n";
  return 0;
}

int do_slave_cases(const noma::NetworkConfig& cfg, const std::vector<double>& gains,
                   const std::vector<double>& qos, double theta,
                   const std::string& out_path) {
  if (gains.empty() || gains.size() != qos.size())
    throw noma::error("slave-cases: --gains and --qos must be equal-length lists");
  size_t k = gains.size();
  std::vector<size_t> order(k);
  std::iota(order.begin(), order.end(), size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return gains[a] > gains[b]; });
  noma::Cluster c;
  c.theta = theta;
  for (size_t i : order) {
    c.members.push_back(static_cast<int>(i));
    c.gains.push_back(gains[i]);
    c.qos.push_back(qos[i]);
  }
  c.csc = noma::composite_csc(c.qos, cfg.sensitivity_db, theta, cfg.rb_bandwidth).composite;

  auto lb = noma::link_budget(cfg);
  auto cases = noma::enumerate_slave_cases(c, cfg.fef, cfg.alpha, lb);
  auto f = open_out(out_path);
  f << "case,signature,feasible,utility,omega,sinr\n";
  for (size_t idx = 0; idx < cases.size(); ++idx) {
    const auto& cs = cases[idx];
    std::string sig;
    for (size_t i = 0; i < k; ++i)
      sig += (cs.kase.floored_mask >> i & 1u) ? 'f' : 'c';
    f << idx << ',' << sig << ',' << (cs.feasible ? 1 : 0) << ','
      << (cs.omega.empty() ? "" : noma::format_double(cs.utility)) << ','
      << join(cs.omega) << ',' << join(cs.sinr) << '\n';
  }
  std::cout << out_path << ": " << cases.size() << " cases\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"uplink NOMA HetNet simulator"};
  app.require_subcommand(0, 1);

  noma::NetworkConfig cfg;
  // The scenario file seeds the defaults, so explicit flags still override it;
  // it has to be read before the parse binds the remaining options.
  std::string config_path;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--config" && i + 1 < argc) config_path = argv[i + 1];
    else if (arg.rfind("--config=", 0) == 0) config_path = arg.substr(9);
  }
  if (!config_path.empty()) {
    try {
      cfg = noma::load_config(config_path);
    } catch (const noma::error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  }
  app.add_option("--config", config_path, "key = value scenario file");
  add_config_options(app, cfg);

  std::string sweep_var;
  std::vector<double> sweep_grid, sweep_alphas;
  std::vector<std::string> sweep_schemes;
  int sweep_seeds = 20;
  std::string out_dir = ".";
  app.add_option("--sweep", sweep_var, "sweep variable: fef|kbar|beta|num_sbs|num_ue");
  app.add_option("--grid", sweep_grid, "sweep grid values")->delimiter(',');
  app.add_option("--alphas", sweep_alphas, "fairness levels, one CSV per value")
      ->delimiter(',');
  app.add_option("--schemes", sweep_schemes, "schemes to sweep")->delimiter(',');
  app.add_option("--seeds", sweep_seeds, "seeds per point");
  app.add_option("--out", out_dir, "output directory for sweep CSVs");

  auto* run = app.add_subcommand("run", "single allocation run");
  run->fallthrough();  // scenario flags may follow the subcommand
  std::string run_scheme = "proposed", trace_path;
  int force_size = 0;
  bool uniform_bw = false;
  run->add_option("--scheme", run_scheme, "allocation scheme");
  run->add_option("--trace", trace_path, "write per-iteration CSV here");
  run->add_option("--force-size", force_size, "fix every cluster capacity");
  run->add_flag("--uniform-bandwidth", uniform_bw, "equal shares, skip the master");

  auto* csize = app.add_subcommand("cluster-size", "feasible-size surface to CSV");
  csize->fallthrough();
  std::vector<double> cs_fefs, cs_floors, cs_rates;
  double cs_theta = 1.0;
  std::string cs_out = "cluster_size.csv";
  csize->add_option("--fef", cs_fefs, "residual factors")->delimiter(',')->required();
  csize->add_option("--floor", cs_floors, "linear SINR floors")->delimiter(',');
  csize->add_option("--rate", cs_rates, "bps demands, converted at --theta")->delimiter(',');
  csize->add_option("--theta", cs_theta, "RB share used for --rate conversion");
  csize->add_option("--out", cs_out, "output CSV");

  auto* slave = app.add_subcommand("slave-cases", "per-corner power dump for one cluster");
  slave->fallthrough();
  std::vector<double> sl_gains, sl_qos;
  double sl_theta = 1.0;
  std::string sl_out = "slave_cases.csv";
  slave->add_option("--gains", sl_gains, "linear member gains")->delimiter(',')->required();
  slave->add_option("--qos", sl_qos, "bps demands")->delimiter(',')->required();
  slave->add_option("--theta", sl_theta, "RB share");
  slave->add_option("--out", sl_out, "output CSV");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return do_run(cfg, run_scheme, trace_path, force_size, uniform_bw);
    if (csize->parsed())
      return do_cluster_size(cfg, cs_fefs, cs_floors, cs_rates, cs_theta, cs_out);
    if (slave->parsed()) return do_slave_cases(cfg, sl_gains, sl_qos, sl_theta, sl_out);
    if (!sweep_var.empty()) {
      if (sweep_grid.empty()) throw noma::error("--sweep needs --grid values");
      return do_sweep(cfg, sweep_var, sweep_grid, sweep_alphas, sweep_schemes, sweep_seeds,
                      out_dir);
    }
  } catch (const noma::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::cout << app.help();
  return 0;
}
