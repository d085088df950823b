#include "noma/assignment.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace noma {

namespace {

// Classic O(n^2 m) shortest-augmenting-path assignment with potentials.
// Requires n <= m and finite costs; returns the matched column per row.
std::vector<int> solve_rect(const std::vector<std::vector<double>>& a) {
  int n = static_cast<int>(a.size());
  int m = static_cast<int>(a[0].size());
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(m + 1, 0.0);
  std::vector<int> p(m + 1, 0), way(m + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(m + 1, inf);
    std::vector<char> used(m + 1, 0);
    do {
      used[j0] = 1;
      int i0 = p[j0], j1 = -1;
      double delta = inf;
      for (int j = 1; j <= m; ++j) {
        if (used[j]) continue;
        double cur = a[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= m; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  std::vector<int> row_to_col(n, -1);
  for (int j = 1; j <= m; ++j) {
    if (p[j]) row_to_col[p[j] - 1] = j - 1;
  }
  return row_to_col;
}

}  // namespace

std::vector<int> min_cost_assignment(const std::vector<std::vector<double>>& cost) {
  int n = static_cast<int>(cost.size());
  if (n == 0) return {};
  int m = static_cast<int>(cost[0].size());
  std::vector<int> result(n, -1);
  if (m == 0) return result;

  // Forbidden edges become a sentinel dwarfing any finite matching, so the
  // solver first minimizes how many forbidden edges it is forced onto.
  double max_finite = 1.0;
  for (const auto& row : cost) {
    for (double c : row) {
      if (std::isfinite(c)) max_finite = std::max(max_finite, std::abs(c));
    }
  }
  double big = max_finite * 4.0 * (std::max(n, m) + 1);

  bool transposed = n > m;
  int rows = transposed ? m : n, cols = transposed ? n : m;
  std::vector<std::vector<double>> a(rows, std::vector<double>(cols));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      double val = transposed ? cost[c][r] : cost[r][c];
      a[r][c] = std::isfinite(val) ? val : big;
    }
  }

  std::vector<int> match = solve_rect(a);
  for (int r = 0; r < rows; ++r) {
    int c = match[r];
    if (c < 0) continue;
    int orig_row = transposed ? c : r;
    int orig_col = transposed ? r : c;
    if (!std::isfinite(cost[orig_row][orig_col])) continue;  // forced onto a forbidden edge
    result[orig_row] = orig_col;
  }
  return result;
}

double assignment_cost(const std::vector<std::vector<double>>& cost,
                       const std::vector<int>& row_to_col) {
  double total = 0.0;
  for (size_t r = 0; r < row_to_col.size(); ++r) {
    if (row_to_col[r] >= 0) total += cost[r][row_to_col[r]];
  }
  return total;
}

}  // namespace noma
