#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "oracles/oracle_assignment.hpp"
#include "oracles/oracle_linear.hpp"
#include "oracles/oracle_master.hpp"
#include "oracles/oracle_slave.hpp"
#include "oracles/oracle_spectral.hpp"

TEST_SUITE("oracles") {

TEST_CASE("gauss_solve solves a known system") {
  // 2x + y = 5, x + 3y = 10 -> x = 1, y = 3
  auto x = oracle::gauss_solve({{2, 1}, {1, 3}}, {5, 10});
  CHECK(x[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(x[1] == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("gauss_solve rejects singular systems") {
  CHECK_THROWS_AS(oracle::gauss_solve({{1, 2}, {2, 4}}, {1, 2}), std::runtime_error);
}

TEST_CASE("spectral_radius on matrices with known spectra") {
  // Permutation-like [[0,1],[1,0]]: eigenvalues +-1, radius 1. This is the
  // cycling pattern the +I shift exists for.
  CHECK(oracle::spectral_radius({{0, 1}, {1, 0}}) == doctest::Approx(1.0).epsilon(1e-10));
  // [[0,2],[0.5,0]]: eigenvalues +-1.
  CHECK(oracle::spectral_radius({{0, 2}, {0.5, 0}}) == doctest::Approx(1.0).epsilon(1e-10));
  // Diagonal.
  CHECK(oracle::spectral_radius({{3, 0}, {0, 2}}) == doctest::Approx(3.0).epsilon(1e-12));
  // Rank-one ones matrix, radius n.
  CHECK(oracle::spectral_radius({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}) ==
        doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("enumerate_assignment picks the cheapest full matching") {
  // Classic 2x2: diagonal costs 1+1=2 beat anti-diagonal 10+10=20.
  auto r = oracle::enumerate_assignment({{1, 10}, {10, 1}});
  CHECK(r.row_to_col == std::vector<int>{0, 1});
  CHECK(r.forbidden_used == 0);
  CHECK(r.cost == doctest::Approx(2.0));
}

TEST_CASE("enumerate_assignment minimizes forbidden edges first") {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  // Finite-cost matching exists only off the cheap diagonal.
  auto r = oracle::enumerate_assignment({{0, kInf}, {0, kInf}});
  // One row must land on a forbidden column; the oracle reports it unmatched.
  CHECK(r.forbidden_used == 1);
  int unmatched = 0;
  for (int c : r.row_to_col) unmatched += (c == -1);
  CHECK(unmatched == 1);
}

TEST_CASE("enumerate_assignment rectangular leaves rows out at zero penalty") {
  // 3 rows, 2 cols: exactly one row stays unmatched and the cheapest pair wins.
  auto r = oracle::enumerate_assignment({{5, 9}, {1, 8}, {7, 2}});
  CHECK(r.row_to_col == std::vector<int>{-1, 0, 1});
  CHECK(r.cost == doctest::Approx(3.0));
}

TEST_CASE("master_objective matches hand values") {
  std::vector<std::vector<double>> d = {{2.0}, {4.0}};
  // alpha = 0: sum(theta*d - 1).
  CHECK(oracle::master_objective(d, {1.0, 1.0}, 0.0) == doctest::Approx(4.0));
  // alpha = 1: ln(2) + ln(4).
  CHECK(oracle::master_objective(d, {1.0, 1.0}, 1.0) ==
        doctest::Approx(std::log(2.0) + std::log(4.0)).epsilon(1e-14));
}

TEST_CASE("pg_master equal log case splits evenly") {
  // Densities keep rates above the 1 bps utility floor along the whole path.
  auto theta = oracle::pg_master({{10.0}, {10.0}}, {0.0, 0.0}, 2.0, 1.0);
  CHECK(theta[0] == doctest::Approx(1.0).epsilon(1e-7));
  CHECK(theta[1] == doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("pg_master linear case walks to the corner") {
  // alpha = 0 with densities 1 vs 3: everything above the floors goes to
  // cluster 1.
  auto theta = oracle::pg_master({{1.0}, {3.0}}, {0.5, 0.5}, 4.0, 0.0);
  CHECK(theta[0] == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(theta[1] == doctest::Approx(3.5).epsilon(1e-6));
}

TEST_CASE("grid_slave single user saturates") {
  // One member, generous budget: full weight is optimal and feasible.
  auto r = oracle::grid_slave({1e-8}, {1.0}, 1.0, 180e3, 7.2e-16, 0.2, 1e-3, 0.0, 41);
  REQUIRE(r.feasible);
  CHECK(r.omega[0] == doctest::Approx(1.0));
}

TEST_CASE("grid_slave flags an impossible floor") {
  // Demanding an SINR the full budget cannot reach.
  auto r = oracle::grid_slave({1e-12}, {1e9}, 1.0, 180e3, 7.2e-16, 0.2, 1e-3, 0.0, 41);
  CHECK_FALSE(r.feasible);
}

}  // TEST_SUITE
