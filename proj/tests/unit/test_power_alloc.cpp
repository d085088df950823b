#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "noma/errors.hpp"
#include "noma/power_alloc.hpp"
#include "noma/rng.hpp"
#include "oracles/oracle_linear.hpp"
#include "oracles/oracle_slave.hpp"

using namespace noma;

namespace {

LinkBudget toy_lb() { return LinkBudget{0.1, 1.0, 1.0}; }  // rho = 0.1 at theta 1

LinkBudget real_lb() {
  return LinkBudget{7.165929069962975e-16, 0.19952623149688797, 180e3};
}

Cluster make_cluster(std::vector<double> gains, std::vector<double> csc, double theta) {
  Cluster c;
  c.members.resize(gains.size());
  for (size_t i = 0; i < gains.size(); ++i) c.members[i] = static_cast<int>(i);
  c.gains = std::move(gains);
  c.csc = std::move(csc);
  c.qos.assign(c.gains.size(), 0.0);
  c.theta = theta;
  return c;
}

Cluster random_cluster(Rng& rng, int k, double span_db = 40.0) {
  std::vector<double> gains(k), csc(k);
  double base = rng.uniform(-12.0, -9.0);
  for (int i = 0; i < k; ++i) {
    gains[i] = std::pow(10.0, base + rng.uniform() * span_db / 10.0);
    csc[i] = std::pow(10.0, rng.uniform(-1.0, 1.2));
  }
  std::sort(gains.rbegin(), gains.rend());
  return make_cluster(std::move(gains), std::move(csc), rng.uniform(0.5, 4.0));
}

// Independent resolution of one corner: floored received powers from a dense
// linear solve with the capped members pinned at full weight.
std::vector<double> dense_case_weights(const KktCase& kase, const Cluster& c, double fef,
                                       const LinkBudget& lb) {
  int k = kase.k;
  double rho = lb.noise_w_per_rb * c.theta / lb.p_ue_max_w;
  std::vector<int> floored;
  for (int i = 0; i < k; ++i)
    if (kase.floored_mask >> i & 1u) floored.push_back(i);
  std::vector<double> omega(k, 1.0);
  if (!floored.empty()) {
    size_t f = floored.size();
    std::vector<std::vector<double>> a(f, std::vector<double>(f, 0.0));
    std::vector<double> b(f);
    for (size_t r = 0; r < f; ++r) {
      int i = floored[r];
      a[r][r] = 1.0;
      double rhs = rho;
      for (int j = 0; j < k; ++j) {
        if (j == i) continue;
        double w = j < i ? fef : 1.0;
        auto it = std::find(floored.begin(), floored.end(), j);
        if (it != floored.end())
          a[r][it - floored.begin()] = -c.csc[i] * w;
        else
          rhs += w * c.gains[j];
      }
      b[r] = c.csc[i] * rhs;
    }
    auto x = oracle::gauss_solve(a, b);
    for (size_t r = 0; r < f; ++r) omega[floored[r]] = x[r] / c.gains[floored[r]];
  }
  return omega;
}

}  // namespace

TEST_SUITE("power_alloc") {

TEST_CASE("worked two-member corner: weak member pinned to its floor") {
  auto c = make_cluster({1.0, 0.5}, {1.0, 1.0}, 1.0);
  KktCase kase{2u, 2};  // member 1 floored, member 0 capped
  auto omega = closed_form_weights(kase, c, 0.1, toy_lb());
  REQUIRE(omega.size() == 2);
  CHECK(omega[0] == doctest::Approx(1.0));
  CHECK(omega[1] == doctest::Approx(0.4).epsilon(1e-14));
  CHECK(check_necessary_conditions(kase, omega, c, 0.1, toy_lb()));
  auto sol = evaluate_weights(c, omega, 0.1, 0.0, toy_lb());
  CHECK(sol.sinr[0] == doctest::Approx(10.0 / 3.0).epsilon(1e-14));
  CHECK(sol.sinr[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("worked two-member search: full power wins") {
  auto c = make_cluster({1.0, 0.5}, {1.0, 1.0}, 1.0);
  auto before = slave_cases_evaluated;
  auto sol = solve_slave(c, 0.1, 0.0, toy_lb());
  CHECK(slave_cases_evaluated - before == 4);
  REQUIRE(sol.feasible);
  CHECK(sol.kase.floored_mask == 0u);
  CHECK(sol.omega == std::vector<double>{1.0, 1.0});
  CHECK(sol.utility == doctest::Approx(1.222392421336448).epsilon(1e-14));
  CHECK(sol.sinr[0] == doctest::Approx(5.0 / 3.0).epsilon(1e-14));
  CHECK(sol.sinr[1] == doctest::Approx(2.5).epsilon(1e-14));

  // every corner is enumerated and the winner is the best feasible one
  auto cases = enumerate_slave_cases(c, 0.1, 0.0, toy_lb());
  REQUIRE(cases.size() == 4);
  double best = -std::numeric_limits<double>::infinity();
  for (auto& cs : cases)
    if (cs.feasible) best = std::max(best, cs.utility);
  CHECK(sol.utility == doctest::Approx(best));
}

TEST_CASE("tight floors push the whole search infeasible") {
  auto c = make_cluster({1.0, 0.5}, {4.0, 1.0}, 1.0);
  auto sol = solve_slave(c, 0.1, 0.0, toy_lb());
  CHECK_FALSE(sol.feasible);
  CHECK(sol.omega.empty());
}

TEST_CASE("two-member corners match hand algebra") {
  Rng rng(1234);
  for (int trial = 0; trial < 200; ++trial) {
    auto c = random_cluster(rng, 2);
    double fef = std::pow(10.0, rng.uniform(-7.0, -0.3));
    double rho = real_lb().noise_w_per_rb * c.theta / real_lb().p_ue_max_w;
    double h0 = c.gains[0], h1 = c.gains[1], g0 = c.csc[0], g1 = c.csc[1];

    auto w1 = closed_form_weights({1u, 2}, c, fef, real_lb());
    if (!w1.empty()) CHECK(w1[0] == doctest::Approx(g0 * (h1 + rho) / h0).epsilon(1e-10));

    auto w2 = closed_form_weights({2u, 2}, c, fef, real_lb());
    if (!w2.empty())
      CHECK(w2[1] == doctest::Approx(g1 * (fef * h0 + rho) / h1).epsilon(1e-10));

    if (1.0 - fef * g0 * g1 > 1e-9) {
      auto w3 = closed_form_weights({3u, 2}, c, fef, real_lb());
      REQUIRE(!w3.empty());
      double want0 = g0 * rho * (1.0 + g1) / (h0 * (1.0 - fef * g0 * g1));
      CHECK(w3[0] == doctest::Approx(want0).epsilon(1e-10));
      CHECK(w3[1] == doctest::Approx(g1 * (fef * want0 * h0 + rho) / h1).epsilon(1e-10));
    }
  }
}

TEST_CASE("every corner agrees with a dense linear solve") {
  Rng rng(5678);
  for (int trial = 0; trial < 120; ++trial) {
    int k = 2 + static_cast<int>(rng.uniform() * 5.0);
    auto c = random_cluster(rng, k);
    double fef = std::pow(10.0, rng.uniform(-7.0, -0.3));
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
      KktCase kase{mask, k};
      auto omega = closed_form_weights(kase, c, fef, real_lb());
      if (omega.empty()) continue;  // anchor denominator collapsed
      std::vector<double> want;
      try {
        want = dense_case_weights(kase, c, fef, real_lb());
      } catch (const std::runtime_error&) {
        continue;  // singular system, nothing to certify against
      }
      for (int i = 0; i < k; ++i)
        CHECK(omega[i] == doctest::Approx(want[i]).epsilon(1e-10));
    }
  }
}

TEST_CASE("grid certificate brackets the family winner") {
  // The capped/floored corner family is not exhaustive once a floor couples
  // members (see the pinned vertex case below), so the grid may legitimately
  // land above the winner. What must hold: verdicts agree, the grid never
  // falls materially below the winner, and any point the grid reports is
  // genuinely feasible and correctly scored under the library arithmetic.
  Rng rng(24680);
  int checked = 0, beyond_family = 0;
  for (int trial = 0; trial < 40; ++trial) {
    int k = 2 + (trial % 2);
    auto c = random_cluster(rng, k);
    // keep floors modest so a fair share of instances is feasible
    for (auto& g : c.csc) g = std::min(g, 3.0);
    double fef = std::pow(10.0, rng.uniform(-7.0, -0.5));
    auto sol = solve_slave(c, fef, 0.0, real_lb());
    auto ref = oracle::grid_slave(c.gains, c.csc, c.theta, real_lb().rb_bandwidth,
                                  real_lb().noise_w_per_rb, real_lb().p_ue_max_w, fef,
                                  0.0, k == 2 ? 201 : 81);
    CHECK(sol.feasible == ref.feasible);
    if (sol.feasible && ref.feasible) {
      ++checked;
      // lattice pitch limits the grid from below: the winner's corner can sit
      // in a basin narrower than a cell, so only gross breakage is caught here
      CHECK(sol.utility <= ref.utility + 0.15 * std::max(1.0, std::abs(sol.utility)));
      auto ps = evaluate_weights(c, ref.omega, fef, 0.0, real_lb());
      CHECK(ps.utility == doctest::Approx(ref.utility).epsilon(1e-9));
      for (int i = 0; i < k; ++i) {
        CHECK(ps.omega[i] >= 0.0);
        CHECK(ps.omega[i] <= 1.0);
        CHECK(ps.sinr[i] >= c.csc[i] * (1.0 - 2e-9));
      }
      if (ref.utility - sol.utility > 1e-4 * std::max(1.0, std::abs(ref.utility))) {
        ++beyond_family;
      }
    }
  }
  CHECK(checked >= 10);
  CHECK(beyond_family <= checked / 2);  // the gap is real but not the norm
}

TEST_CASE("capped-and-floored vertex escapes the case family") {
  // With residual interference a strong member's floor can pin a weak
  // member's weight while neither of the weak member's own constraints is
  // active. No per-member capped-or-floored labeling reaches that vertex, so
  // the corner winner is a lower bound on the cluster optimum, not the
  // optimum itself. Instance found by the grid oracle.
  auto c = make_cluster({2.0592743184219133e-08, 1.3343977094554263e-08},
                        {2.7031599789659433, 3.0}, 1.2060245501674014);
  double fef = 3.9930297368832634e-04;
  auto lb = real_lb();
  auto sol = solve_slave(c, fef, 0.0, lb);
  REQUIRE(sol.feasible);
  CHECK(sol.kase.floored_mask == 2);  // best corner: strong capped, weak floored

  // vertex: strong member at full weight with its own floor active, weak
  // member's weight read off that floor
  double rho = lb.noise_w_per_rb * c.theta / lb.p_ue_max_w;
  double w1 = (c.gains[0] / c.csc[0] - rho) / c.gains[1];
  REQUIRE(w1 > 0.0);
  REQUIRE(w1 < 1.0);
  auto ps = evaluate_weights(c, {1.0, w1}, fef, 0.0, lb);
  CHECK(ps.sinr[0] == doctest::Approx(c.csc[0]).epsilon(1e-12));
  CHECK(ps.sinr[1] > c.csc[1]);
  CHECK(ps.utility > sol.utility * (1.0 + 1e-4));
}

TEST_CASE("feasible solutions satisfy bounds and floors") {
  Rng rng(13579);
  int feasible_seen = 0;
  for (int trial = 0; trial < 300; ++trial) {
    int k = 1 + static_cast<int>(rng.uniform() * 6.0);
    auto c = random_cluster(rng, k);
    double fef = std::pow(10.0, rng.uniform(-7.0, -0.3));
    double alpha = (trial % 3 == 0) ? 0.0 : (trial % 3 == 1 ? 0.5 : 1.0);
    auto before = slave_cases_evaluated;
    auto sol = solve_slave(c, fef, alpha, real_lb());
    CHECK(slave_cases_evaluated - before == (1ull << k));
    if (!sol.feasible) continue;
    ++feasible_seen;
    auto s = sinr(c, sol.omega, fef, real_lb());
    for (int i = 0; i < k; ++i) {
      CHECK(sol.omega[i] >= 0.0);
      CHECK(sol.omega[i] <= 1.0);
      CHECK(s[i] >= c.csc[i] * (1.0 - 1e-9));
      CHECK(s[i] == doctest::Approx(sol.sinr[i]).epsilon(1e-12));
    }
    CHECK(sol.utility == doctest::Approx(alpha_fair_objective(sol.rates, alpha)).epsilon(1e-12));
  }
  CHECK(feasible_seen >= 40);
}

TEST_CASE("worse cancellation never helps") {
  auto c = make_cluster({1.0, 0.35}, {0.8, 0.6}, 1.0);
  double prev = std::numeric_limits<double>::infinity();
  bool was_feasible = true;
  for (double fef : {1e-9, 1e-6, 1e-3, 1e-2, 0.1, 0.3, 0.6, 0.9}) {
    auto sol = solve_slave(c, fef, 0.0, toy_lb());
    if (!sol.feasible) {
      was_feasible = false;  // once lost, feasibility never comes back
      continue;
    }
    CHECK(was_feasible);
    CHECK(sol.utility <= prev + 1e-9 * std::max(1.0, std::abs(prev)));
    prev = sol.utility;
  }
}

TEST_CASE("perfect cancellation favors full power when it fits") {
  // At fef ~ 0 and alpha = 0 the cluster utility telescopes into a function
  // of total received power, so whenever the all-capped corner clears the
  // floors it is the winner.
  Rng rng(86420);
  int conditioned = 0;
  for (int trial = 0; trial < 50; ++trial) {
    auto c = random_cluster(rng, 2 + trial % 2);
    for (auto& g : c.csc) g = std::min(g, 0.4);
    std::vector<double> full(c.gains.size(), 1.0);
    auto s = sinr(c, full, 1e-12, real_lb());
    bool full_ok = true;
    for (size_t i = 0; i < s.size(); ++i) full_ok = full_ok && s[i] >= c.csc[i];
    if (!full_ok) continue;
    ++conditioned;
    auto sol = solve_slave(c, 1e-12, 0.0, real_lb());
    REQUIRE(sol.feasible);
    CHECK(sol.kase.floored_mask == 0u);
  }
  CHECK(conditioned >= 20);
}

TEST_CASE("degenerate inputs throw") {
  Cluster empty;
  empty.theta = 1.0;
  CHECK_THROWS_AS(solve_slave(empty, 0.1, 0.0, toy_lb()), error);
  auto c = make_cluster(std::vector<double>(21, 1.0), std::vector<double>(21, 0.1), 1.0);
  CHECK_THROWS_AS(solve_slave(c, 0.1, 0.0, toy_lb()), error);
}

}  // TEST_SUITE
