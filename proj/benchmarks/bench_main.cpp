#include <benchmark/benchmark.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "noma/assignment.hpp"
#include "noma/bandwidth_alloc.hpp"
#include "noma/cluster_formation.hpp"
#include "noma/config.hpp"
#include "noma/noma_core.hpp"
#include "noma/orchestrator.hpp"
#include "noma/power_alloc.hpp"
#include "noma/rng.hpp"
#include "noma/topology.hpp"

using namespace noma;

namespace {

Cluster bench_cluster(int k, std::uint64_t seed) {
  Rng rng(seed);
  Cluster c;
  c.theta = 2.0;
  std::vector<double> qos(k);
  for (int i = 0; i < k; ++i) {
    c.gains.push_back(std::pow(10.0, rng.uniform(-12.0, -8.0)));
    qos[i] = rng.uniform(2e5, 1.2e6);
  }
  std::sort(c.gains.rbegin(), c.gains.rend());
  c.members.resize(k);
  std::iota(c.members.begin(), c.members.end(), 0);
  c.qos = qos;
  c.csc = composite_csc(qos, -std::numeric_limits<double>::infinity(), c.theta, 180e3)
              .composite;
  return c;
}

}  // namespace

// Exhaustive corner search: cost doubles per extra member.
static void BM_slave(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  auto c = bench_cluster(k, 42);
  auto lb = link_budget(NetworkConfig{});
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_slave(c, 1e-3, 0.0, lb));
  }
  state.SetComplexityN(1 << k);
}
BENCHMARK(BM_slave)->DenseRange(2, 10)->Complexity(benchmark::oN);

static void BM_assignment(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Rng rng(7);
  std::vector<std::vector<double>> cost(n, std::vector<double>(n));
  for (auto& row : cost)
    for (auto& v : row) v = rng.uniform(0.0, 100.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(min_cost_assignment(cost));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_assignment)->RangeMultiplier(2)->Range(8, 128)->Complexity(benchmark::oNCubed);

static void BM_master(benchmark::State& state) {
  int c = static_cast<int>(state.range(0));
  Rng rng(11);
  MasterInstance mi;
  mi.budget = 100.0;
  mi.density.resize(c);
  mi.theta_lo.resize(c);
  for (int j = 0; j < c; ++j) {
    mi.density[j].resize(1 + static_cast<int>(rng.uniform() * 8.0));
    for (auto& d : mi.density[j]) d = std::pow(10.0, rng.uniform(4.0, 7.0));
    mi.theta_lo[j] = rng.uniform(0.0, 0.5 * mi.budget / c);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_master(mi, 0.5));
  }
}
BENCHMARK(BM_master)->RangeMultiplier(2)->Range(4, 64);

static void BM_formation(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Rng rng(13);
  std::vector<int> ids(n), caps(n);
  std::vector<double> gains(n), qos(n);
  std::iota(ids.begin(), ids.end(), 0);
  for (int i = 0; i < n; ++i) {
    gains[i] = std::pow(10.0, rng.uniform(-12.0, -8.0));
    qos[i] = 1e6;
    caps[i] = 2 + static_cast<int>(rng.uniform() * 9.0);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(form_clusters(ids, gains, qos, caps, 10));
  }
}
BENCHMARK(BM_formation)->Arg(25)->Arg(50)->Arg(100);

static void BM_pipeline_iteration(benchmark::State& state) {
  NetworkConfig cfg;
  auto topo = generate_topology(cfg);
  RunOptions opt;
  opt.t_max = 1;  // cost of one alternating step, network-wide
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_allocation(topo, cfg, opt));
  }
}
BENCHMARK(BM_pipeline_iteration);

static void BM_full_run(benchmark::State& state) {
  NetworkConfig cfg;
  auto topo = generate_topology(cfg);
  RunOptions opt;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_allocation(topo, cfg, opt));
  }
}
BENCHMARK(BM_full_run);

BENCHMARK_MAIN();
