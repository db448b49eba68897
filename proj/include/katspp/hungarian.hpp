#pragma once

#include <vector>

#include "katspp/types.hpp"

namespace katspp {

struct AssignmentResult {
    std::vector<int> col_of_row;  // col_of_row[i] = column matched to row i
    Cost total = 0;
};

// Minimum-cost perfect matching on a square cost matrix via the O(N^3)
// primal-dual (Hungarian) algorithm with integer potentials.  Deterministic:
// columns are scanned in ascending index order, which biases ties toward
// lexicographically earlier arcs.
AssignmentResult solve_assignment(const std::vector<std::vector<Cost>>& cost);

}  // namespace katspp
