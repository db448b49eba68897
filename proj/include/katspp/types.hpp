#pragma once

#include <cstdint>
#include <vector>

namespace katspp {

using NodeId = int;
using Cost = std::int64_t;
using CostMatrix = std::vector<std::vector<Cost>>;

// A collection of s-t paths together with its cost aggregates.  For the
// single-source/single-sink problem every path starts at s and ends at t and
// every other node appears on exactly one path.  Endpoint variants and the
// General problem relax the endpoint rule per path.
struct PathSolution {
    std::vector<std::vector<NodeId>> paths;
    Cost total_cost = 0;
    Cost max_cost = 0;
    int k_prime = 0;
};

}  // namespace katspp
