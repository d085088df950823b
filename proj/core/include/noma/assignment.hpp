#pragma once

#include <vector>

namespace noma {

// Exact min-cost rectangular assignment (Jonker-Volgenant shortest augmenting
// paths). cost[r][c] may be +inf to forbid an edge. With R <= C every row is
// matched to a distinct column; with R > C every column is matched. Returns
// the matched column per row, -1 for rows left unmatched (either R > C or a
// row whose only edges are forbidden).
std::vector<int> min_cost_assignment(const std::vector<std::vector<double>>& cost);

// Total cost of a row->column matching, ignoring -1 entries.
double assignment_cost(const std::vector<std::vector<double>>& cost,
                       const std::vector<int>& row_to_col);

}  // namespace noma
