#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "katspp/types.hpp"

namespace katspp {

// Dense asymmetric metric: nonnegative integer costs with zero diagonal that
// satisfy the directed triangle inequality.  Instances are always closed on
// ingestion, so algorithms may assume the inequality holds.  Immutable after
// construction.
class Metric {
  public:
    // Validates shape (square, n >= 2, zero diagonal, nonnegative entries)
    // and applies the all-pairs shortest-path closure.
    static Metric from_raw(CostMatrix raw);

    // Accepts a matrix that is already metric; throws if any triangle is
    // violated.
    static Metric from_closed(CostMatrix closed);

    int size() const { return static_cast<int>(cost_.size()); }
    Cost at(NodeId u, NodeId v) const { return cost_[u][v]; }
    const CostMatrix& rows() const { return cost_; }

    bool valid_node(NodeId v) const { return v >= 0 && v < size(); }
    bool is_symmetric() const;

    // Finite stand-in for infinity: strictly larger than the sum of all
    // entries, so it dominates any arc combination drawn from real costs.
    Cost big() const { return big_; }

    // Cost of a node sequence (sum over consecutive arcs).
    Cost path_cost(const std::vector<NodeId>& path) const;

    bool operator==(const Metric& other) const { return cost_ == other.cost_; }

  private:
    explicit Metric(CostMatrix m);

    CostMatrix cost_;
    Cost big_ = 1;
};

// The [OP] surface: returns the shortest-path closure of a raw cost matrix.
Metric metric_closure(const CostMatrix& raw);

// Appends a copy of v: the copy inherits v's rows/columns and sits at
// distance zero from v in both directions.  Shortest-path distances among
// the original nodes are unchanged.
std::pair<Metric, NodeId> duplicate_node(const Metric& m, NodeId v);

struct KatsppInstance {
    Metric metric;
    NodeId s = 0;
    NodeId t = 1;
    int k = 1;
    int b = 1;  // bicriteria parameter
};

struct GeneralInstance {
    Metric metric;
    std::vector<std::pair<NodeId, NodeId>> pairs;
};

// Throws std::invalid_argument when the instance breaks its invariants.
void validate_instance(const KatsppInstance& inst);
void validate_instance(const GeneralInstance& inst);

// Family with an unbounded gap between the optima for k = 1 and k = m_pairs:
// m_pairs disjoint zero-cost s -> v_i -> t channels, everything else cost 1.
// Node layout: s = 0, channels 1..m_pairs, t = m_pairs + 1; k = m_pairs.
KatsppInstance gen_gap_instance(int m_pairs);

// Closure of a uniformly random integer matrix; deterministic per seed.
Metric gen_random_metric(int n, std::uint64_t seed, Cost max_cost);

// Same, but the raw draw is symmetric (closure preserves symmetry).
Metric gen_random_symmetric_metric(int n, std::uint64_t seed, Cost max_cost);

}  // namespace katspp
