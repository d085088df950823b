#pragma once

#include <vector>

namespace oracle {

struct EnumAssignment {
  std::vector<int> row_to_col;  // -1: unmatched or forced onto a forbidden edge
  int forbidden_used = 0;
  double cost = 0.0;  // finite part only
};

// Exhaustive min-cost rectangular matching, full cardinality min(rows, cols),
// ordered lexicographically by (forbidden edges used, finite cost). Sizes are
// meant to stay tiny (<= 8 x 12).
EnumAssignment enumerate_assignment(const std::vector<std::vector<double>>& cost);

}  // namespace oracle
