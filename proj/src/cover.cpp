#include "katspp/cover.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "katspp/hungarian.hpp"

namespace katspp {

CoverResult min_cost_kpath_cycle_cover(const Metric& m, const std::set<NodeId>& w, NodeId s,
                                       NodeId t, int k) {
    if (!w.count(s) || !w.count(t))
        throw std::invalid_argument("k-path/cycle cover: W must contain s and t");
    if (s == t) throw std::invalid_argument("k-path/cycle cover: s != t required");
    if (k < 1) throw std::invalid_argument("k-path/cycle cover: k >= 1 required");
    for (NodeId v : w)
        if (!m.valid_node(v)) throw std::invalid_argument("k-path/cycle cover: node out of range");

    std::vector<NodeId> internals;
    for (NodeId v : w)
        if (v != s && v != t) internals.push_back(v);
    const int ni = static_cast<int>(internals.size());
    const int big_n = ni + k;

    Cost max_entry = 0;
    for (NodeId u : w)
        for (NodeId v : w) max_entry = std::max(max_entry, m.at(u, v));
    const Cost forbidden = (max_entry + 1) * (big_n + 1);

    // Rows 0..k-1 are copies of s, rows k.. are internals; columns 0..k-1 are
    // copies of t, columns k.. are internals.
    auto row_node = [&](int i) { return i < k ? s : internals[i - k]; };
    auto col_node = [&](int j) { return j < k ? t : internals[j - k]; };

    std::vector<std::vector<Cost>> a(big_n, std::vector<Cost>(big_n, 0));
    for (int i = 0; i < big_n; ++i) {
        for (int j = 0; j < big_n; ++j) {
            const NodeId u = row_node(i), v = col_node(j);
            a[i][j] = (u == v) ? forbidden : m.at(u, v);
        }
    }

    const AssignmentResult match = solve_assignment(a);

    CoverResult result;
    std::map<NodeId, NodeId> succ;  // internal node -> successor
    std::vector<NodeId> s_targets;
    for (int i = 0; i < big_n; ++i) {
        const NodeId u = row_node(i), v = col_node(match.col_of_row[i]);
        if (a[i][match.col_of_row[i]] >= forbidden)
            throw std::logic_error("k-path/cycle cover: matching used an excluded self arc");
        result.flow.add(u, v);
        if (i < k)
            s_targets.push_back(v);
        else
            succ[u] = v;
    }
    result.cost = result.flow.cost(m);

    // Decompose: k walks from s, then the leftover successor cycles.
    std::sort(s_targets.begin(), s_targets.end());
    std::set<NodeId> consumed;
    for (NodeId first : s_targets) {
        std::vector<NodeId> path{s};
        NodeId cur = first;
        while (cur != t) {
            path.push_back(cur);
            consumed.insert(cur);
            cur = succ.at(cur);
        }
        path.push_back(t);
        result.paths.push_back(std::move(path));
    }
    for (NodeId v : internals) {
        if (consumed.count(v)) continue;
        std::vector<NodeId> cycle;
        NodeId cur = v;
        do {
            cycle.push_back(cur);
            consumed.insert(cur);
            cur = succ.at(cur);
        } while (cur != v);
        result.cycles.push_back(std::move(cycle));
    }
    return result;
}

}  // namespace katspp
