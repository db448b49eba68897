#pragma once

#include <map>
#include <set>
#include <utility>

#include "katspp/metric.hpp"
#include "katspp/types.hpp"

namespace katspp {

using Arc = std::pair<NodeId, NodeId>;

// Sparse integral flow / circulation: arc -> positive multiplicity.  Zero
// entries are never stored.  Ordered storage keeps every traversal
// deterministic.
class IntFlow {
  public:
    void add(NodeId u, NodeId v, long long units = 1);
    // Throws if the arc would go negative.
    void subtract(NodeId u, NodeId v, long long units = 1);

    long long at(NodeId u, NodeId v) const;
    long long outdeg(NodeId v) const;
    long long indeg(NodeId v) const;
    bool conserves_at(NodeId v) const { return indeg(v) == outdeg(v); }

    bool empty() const { return arcs_.empty(); }
    long long total_units() const;
    Cost cost(const Metric& m) const;

    std::set<NodeId> support_nodes() const;
    // Out-neighbours of v with positive multiplicity, ascending.
    std::map<NodeId, long long> out_arcs(NodeId v) const;
    std::map<NodeId, long long> in_arcs(NodeId v) const;

    // True when the support contains no directed cycle.
    bool is_acyclic() const;
    bool is_circulation() const;

    const std::map<Arc, long long>& arcs() const { return arcs_; }

    IntFlow& operator+=(const IntFlow& other);
    bool operator==(const IntFlow& other) const { return arcs_ == other.arcs_; }

  private:
    std::map<Arc, long long> arcs_;
};

}  // namespace katspp
