#pragma once

#include <optional>
#include <vector>

#include "katspp/types.hpp"

namespace katspp {

// Arc with flow bounds lo <= flow <= hi and a nonnegative per-unit cost.
struct BoundedArc {
    int u = 0;
    int v = 0;
    long long lo = 0;
    long long hi = 0;
    Cost cost = 0;
};

// Minimum-cost circulation respecting the bounds, or nullopt when none
// exists.  Returns one flow value per input arc.  Standard reduction: peel
// off lower bounds into node imbalances, then run successive-shortest-path
// min-cost max-flow between a super source and super sink; feasible iff all
// imbalances are met.
std::optional<std::vector<long long>> min_cost_circulation(int num_nodes,
                                                           const std::vector<BoundedArc>& arcs);

}  // namespace katspp
