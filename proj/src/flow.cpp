#include "katspp/flow.hpp"

#include <stdexcept>

namespace katspp {

void IntFlow::add(NodeId u, NodeId v, long long units) {
    if (units < 0) throw std::invalid_argument("IntFlow::add: negative units");
    if (units == 0) return;
    arcs_[{u, v}] += units;
}

void IntFlow::subtract(NodeId u, NodeId v, long long units) {
    if (units < 0) throw std::invalid_argument("IntFlow::subtract: negative units");
    if (units == 0) return;
    auto it = arcs_.find({u, v});
    if (it == arcs_.end() || it->second < units)
        throw std::invalid_argument("IntFlow::subtract: multiplicity would go negative");
    it->second -= units;
    if (it->second == 0) arcs_.erase(it);
}

long long IntFlow::at(NodeId u, NodeId v) const {
    auto it = arcs_.find({u, v});
    return it == arcs_.end() ? 0 : it->second;
}

long long IntFlow::outdeg(NodeId v) const {
    long long total = 0;
    for (auto it = arcs_.lower_bound({v, 0}); it != arcs_.end() && it->first.first == v; ++it)
        total += it->second;
    return total;
}

long long IntFlow::indeg(NodeId v) const {
    long long total = 0;
    for (const auto& [arc, units] : arcs_)
        if (arc.second == v) total += units;
    return total;
}

long long IntFlow::total_units() const {
    long long total = 0;
    for (const auto& [arc, units] : arcs_) total += units;
    return total;
}

Cost IntFlow::cost(const Metric& m) const {
    Cost total = 0;
    for (const auto& [arc, units] : arcs_) total += m.at(arc.first, arc.second) * units;
    return total;
}

std::set<NodeId> IntFlow::support_nodes() const {
    std::set<NodeId> nodes;
    for (const auto& [arc, units] : arcs_) {
        nodes.insert(arc.first);
        nodes.insert(arc.second);
    }
    return nodes;
}

std::map<NodeId, long long> IntFlow::out_arcs(NodeId v) const {
    std::map<NodeId, long long> out;
    for (auto it = arcs_.lower_bound({v, 0}); it != arcs_.end() && it->first.first == v; ++it)
        out[it->first.second] = it->second;
    return out;
}

std::map<NodeId, long long> IntFlow::in_arcs(NodeId v) const {
    std::map<NodeId, long long> in;
    for (const auto& [arc, units] : arcs_)
        if (arc.second == v) in[arc.first] = units;
    return in;
}

bool IntFlow::is_acyclic() const {
    std::map<NodeId, std::set<NodeId>> adj;
    for (const auto& [arc, units] : arcs_) adj[arc.first].insert(arc.second);
    std::map<NodeId, int> color;  // 0 white, 1 gray, 2 black
    for (const auto& [arc, units] : arcs_) {
        color.emplace(arc.first, 0);
        color.emplace(arc.second, 0);
    }
    // Iterative DFS with an explicit stack of (node, next-neighbour iterator).
    for (auto& [start, c] : color) {
        if (c != 0) continue;
        std::vector<std::pair<NodeId, std::set<NodeId>::const_iterator>> stack;
        color[start] = 1;
        stack.push_back({start, adj[start].cbegin()});
        while (!stack.empty()) {
            auto& [v, it] = stack.back();
            if (it == adj[v].cend()) {
                color[v] = 2;
                stack.pop_back();
                continue;
            }
            NodeId u = *it;
            ++it;
            if (color[u] == 1) return false;
            if (color[u] == 0) {
                color[u] = 1;
                stack.push_back({u, adj[u].cbegin()});
            }
        }
    }
    return true;
}

bool IntFlow::is_circulation() const {
    for (NodeId v : support_nodes())
        if (!conserves_at(v)) return false;
    return true;
}

IntFlow& IntFlow::operator+=(const IntFlow& other) {
    for (const auto& [arc, units] : other.arcs_) arcs_[arc] += units;
    return *this;
}

}  // namespace katspp
