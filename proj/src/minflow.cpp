#include "katspp/minflow.hpp"

#include <deque>
#include <limits>
#include <stdexcept>

namespace katspp {

namespace {

// Successive shortest paths; the per-augmentation search is SPFA so that
// negative residual costs need no potential bookkeeping.  Networks here are
// tiny, so the simple variant is the right trade.
class MinCostMaxFlow {
  public:
    explicit MinCostMaxFlow(int n) : head_(n, -1), n_(n) {}

    int add_arc(int u, int v, long long cap, Cost cost) {
        const int id = static_cast<int>(to_.size());
        to_.push_back(v);
        next_.push_back(head_[u]);
        head_[u] = id;
        cap_.push_back(cap);
        cost_.push_back(cost);
        to_.push_back(u);
        next_.push_back(head_[v]);
        head_[v] = id + 1;
        cap_.push_back(0);
        cost_.push_back(-cost);
        return id;
    }

    long long flow_on(int arc_id) const { return cap_[arc_id ^ 1]; }

    std::pair<long long, Cost> run(int s, int t) {
        const Cost kInf = std::numeric_limits<Cost>::max() / 4;
        long long flow = 0;
        Cost total_cost = 0;
        while (true) {
            std::vector<Cost> dist(n_, kInf);
            std::vector<int> prev_arc(n_, -1);
            std::vector<char> in_queue(n_, 0);
            std::deque<int> queue;
            dist[s] = 0;
            queue.push_back(s);
            in_queue[s] = 1;
            while (!queue.empty()) {
                const int v = queue.front();
                queue.pop_front();
                in_queue[v] = 0;
                for (int e = head_[v]; e != -1; e = next_[e]) {
                    if (cap_[e] <= 0) continue;
                    const int u = to_[e];
                    const Cost nd = dist[v] + cost_[e];
                    if (nd < dist[u]) {
                        dist[u] = nd;
                        prev_arc[u] = e;
                        if (!in_queue[u]) {
                            queue.push_back(u);
                            in_queue[u] = 1;
                        }
                    }
                }
            }
            if (dist[t] >= kInf) break;
            long long push = std::numeric_limits<long long>::max();
            for (int v = t; v != s;) {
                const int e = prev_arc[v];
                push = std::min(push, cap_[e]);
                v = to_[e ^ 1];
            }
            for (int v = t; v != s;) {
                const int e = prev_arc[v];
                cap_[e] -= push;
                cap_[e ^ 1] += push;
                total_cost += cost_[e] * push;
                v = to_[e ^ 1];
            }
            flow += push;
        }
        return {flow, total_cost};
    }

  private:
    std::vector<int> head_, next_, to_;
    std::vector<long long> cap_;
    std::vector<Cost> cost_;
    int n_;
};

}  // namespace

std::optional<std::vector<long long>> min_cost_circulation(int num_nodes,
                                                           const std::vector<BoundedArc>& arcs) {
    for (const auto& a : arcs) {
        if (a.u < 0 || a.u >= num_nodes || a.v < 0 || a.v >= num_nodes)
            throw std::invalid_argument("min_cost_circulation: node out of range");
        if (a.lo < 0 || a.lo > a.hi)
            throw std::invalid_argument("min_cost_circulation: bad bounds");
        if (a.cost < 0) throw std::invalid_argument("min_cost_circulation: negative cost");
    }

    const int super_s = num_nodes;
    const int super_t = num_nodes + 1;
    MinCostMaxFlow net(num_nodes + 2);
    std::vector<long long> imbalance(num_nodes, 0);  // inflow demand from lower bounds
    std::vector<int> core_arc(arcs.size(), -1);
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        const auto& a = arcs[i];
        core_arc[i] = net.add_arc(a.u, a.v, a.hi - a.lo, a.cost);
        imbalance[a.v] += a.lo;
        imbalance[a.u] -= a.lo;
    }
    long long required = 0;
    for (int v = 0; v < num_nodes; ++v) {
        if (imbalance[v] > 0) {
            net.add_arc(super_s, v, imbalance[v], 0);
            required += imbalance[v];
        } else if (imbalance[v] < 0) {
            net.add_arc(v, super_t, -imbalance[v], 0);
        }
    }
    const auto [flow, cost] = net.run(super_s, super_t);
    (void)cost;
    if (flow != required) return std::nullopt;

    std::vector<long long> result(arcs.size(), 0);
    for (std::size_t i = 0; i < arcs.size(); ++i)
        result[i] = arcs[i].lo + net.flow_on(core_arc[i]);
    return result;
}

}  // namespace katspp
