#pragma once

#include <set>
#include <vector>

#include "katspp/flow.hpp"
#include "katspp/metric.hpp"
#include "katspp/types.hpp"

namespace katspp {

// A minimum-cost k-path/cycle cover: an integral flow with unit throughput
// at every node of W - {s,t}, k units out of s and into t, and nothing into
// s or out of t.  It decomposes into k s-t paths plus vertex-disjoint cycles.
struct CoverResult {
    IntFlow flow;
    Cost cost = 0;
    std::vector<std::vector<NodeId>> paths;   // k node sequences s..t
    std::vector<std::vector<NodeId>> cycles;  // node sequences; wrap arc implied
};

// Computes the cover by reduction to minimum-weight perfect bipartite
// matching: the left side holds k copies of s plus W - {s,t}, the right side
// k copies of t plus W - {s,t}; matching u to v selects arc (u,v).  Self
// arcs are excluded.
CoverResult min_cost_kpath_cycle_cover(const Metric& m, const std::set<NodeId>& w, NodeId s,
                                       NodeId t, int k);

}  // namespace katspp
