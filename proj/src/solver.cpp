#include "katspp/solver.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "katspp/minflow.hpp"

namespace katspp {

long long floor_log2(long long n) {
    if (n < 1) throw std::invalid_argument("floor_log2: n >= 1 required");
    return std::bit_width(static_cast<unsigned long long>(n)) - 1;
}

namespace {

// First directed cycle of the support in deterministic DFS order (smallest
// start node, smallest neighbour first); empty when acyclic.
std::vector<NodeId> find_support_cycle(const IntFlow& f) {
    std::map<NodeId, std::vector<NodeId>> adj;
    for (const auto& [arc, units] : f.arcs()) adj[arc.first].push_back(arc.second);

    std::map<NodeId, int> color;
    for (const auto& [v, out] : adj) color.emplace(v, 0);

    std::vector<NodeId> stack;
    std::vector<NodeId> cycle;

    std::function<bool(NodeId)> dfs = [&](NodeId v) -> bool {
        color[v] = 1;
        stack.push_back(v);
        auto it = adj.find(v);
        if (it != adj.end()) {
            for (NodeId u : it->second) {
                auto cu = color.find(u);
                const int c = (cu == color.end()) ? 2 : cu->second;  // sink-only nodes are done
                if (c == 1) {
                    auto pos = std::find(stack.begin(), stack.end(), u);
                    cycle.assign(pos, stack.end());
                    return true;
                }
                if (c == 0 && dfs(u)) return true;
            }
        }
        color[v] = 2;
        stack.pop_back();
        return false;
    };

    for (auto& [v, c] : color) {
        if (c == 0 && dfs(v)) return cycle;
    }
    return {};
}

void unit_shortcut(IntFlow& f, NodeId w) {
    const auto in = f.in_arcs(w);
    const auto out = f.out_arcs(w);
    if (in.empty() || out.empty()) throw std::logic_error("unit_shortcut: no arcs through node");
    const NodeId u = in.begin()->first;
    const NodeId v = out.begin()->first;
    if (u == v) throw std::logic_error("unit_shortcut: would create a self loop");
    f.subtract(u, w);
    f.subtract(w, v);
    f.add(u, v);
}

}  // namespace

std::pair<IntFlow, IntFlow> extract_circulation(const IntFlow& f) {
    IntFlow rest = f;
    IntFlow circ;
    while (true) {
        const std::vector<NodeId> cycle = find_support_cycle(rest);
        if (cycle.empty()) break;
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            const NodeId a = cycle[i];
            const NodeId b = cycle[(i + 1) % cycle.size()];
            rest.subtract(a, b);
            circ.add(a, b);
        }
    }
    return {std::move(rest), std::move(circ)};
}

NodeId choose_representative(const std::set<NodeId>& component, const IntFlow& h,
                             const std::map<NodeId, long long>& l) {
    if (component.empty())
        throw std::invalid_argument("choose_representative: empty component");
    NodeId best = -1;
    long long best_score = 0;
    for (NodeId u : component) {
        const auto it = l.find(u);
        const long long lu = (it == l.end()) ? 0 : it->second;
        const long long score = lu + h.outdeg(u);
        if (best == -1 || score < best_score) {
            best = u;
            best_score = score;
        }
    }
    return best;
}

IntFlow shortcut_node(const IntFlow& f, NodeId w) {
    if (f.indeg(w) != f.outdeg(w))
        throw std::invalid_argument("shortcut_node: flow must conserve at the node");
    IntFlow g = f;
    while (g.outdeg(w) > 0) unit_shortcut(g, w);
    return g;
}

std::pair<IntFlow, long long> uniformize(const IntFlow& f, const std::map<NodeId, long long>& l,
                                         long long big_l) {
    long long gamma = 0;
    for (const auto& [v, lv] : l) gamma = std::max(gamma, lv);

    IntFlow g = f;
    for (const auto& [v, lv] : l) {
        if (g.outdeg(v) != big_l - lv)
            throw std::logic_error("uniformize: throughput identity L - l_v violated");
        for (long long excess = gamma - lv; excess > 0; --excess) unit_shortcut(g, v);
    }
    return {std::move(g), gamma};
}

RoundResult round_to_paths(const Metric& m, const IntFlow& f_uniform, NodeId s, NodeId t, int k,
                           int b, long long big_l, long long gamma) {
    const long long tau = big_l - gamma;
    if (tau < 1) throw std::logic_error("round_to_paths: throughput must be positive");
    const long long d_max = static_cast<long long>(k) * big_l / tau;

    std::vector<NodeId> internals;
    for (NodeId v : f_uniform.support_nodes())
        if (v != s && v != t) internals.push_back(v);

    // Node split: internal w becomes w_in -> w_out with both bounds 1; flow
    // value D is forced by a (t, s) return arc with both bounds D.
    std::map<NodeId, int> in_id, out_id;
    int next = 2;  // 0 = s, 1 = t
    for (NodeId v : internals) {
        in_id[v] = next++;
        out_id[v] = next++;
    }
    const int num_nodes = next;
    auto tail_of = [&](NodeId u) { return u == s ? 0 : out_id.at(u); };
    auto head_of = [&](NodeId v) { return v == t ? 1 : in_id.at(v); };

    std::vector<BoundedArc> arcs;
    std::vector<Arc> metric_arc_of;  // aligned with `arcs` for the metric arcs only
    for (const auto& [arc, units] : f_uniform.arcs()) {
        arcs.push_back({tail_of(arc.first), head_of(arc.second), 0, units,
                        m.at(arc.first, arc.second)});
        metric_arc_of.push_back(arc);
    }
    const std::size_t num_metric_arcs = arcs.size();
    for (NodeId v : internals) arcs.push_back({in_id[v], out_id[v], 1, 1, 0});
    const std::size_t return_arc = arcs.size();
    arcs.push_back({1, 0, 0, 0, 0});  // bounds filled per D below

    auto attempt = [&](long long d_value) -> std::optional<IntFlow> {
        arcs[return_arc].lo = d_value;
        arcs[return_arc].hi = d_value;
        const auto flows = min_cost_circulation(num_nodes, arcs);
        if (!flows) return std::nullopt;
        IntFlow z;
        for (std::size_t i = 0; i < num_metric_arcs; ++i)
            if ((*flows)[i] > 0) z.add(metric_arc_of[i].first, metric_arc_of[i].second, (*flows)[i]);
        return z;
    };

    std::optional<IntFlow> at_dmax = attempt(d_max);
    if (!at_dmax)
        throw std::logic_error("round_to_paths: no flow at D = floor(kL/(L-gamma))");

    RoundResult result;
    result.dmax_feasible = true;
    for (long long d_value = k; d_value <= d_max; ++d_value) {
        std::optional<IntFlow> z =
            (d_value == d_max) ? std::move(at_dmax) : attempt(d_value);
        if (!z) continue;
        result.k_prime = static_cast<int>(d_value);
        result.z = std::move(*z);
        break;
    }

    // Path decomposition: conservation plus an acyclic support means every
    // greedy walk from s ends at t.
    IntFlow rem = result.z;
    for (int i = 0; i < result.k_prime; ++i) {
        std::vector<NodeId> path{s};
        NodeId cur = s;
        while (cur != t) {
            const auto out = rem.out_arcs(cur);
            if (out.empty()) throw std::logic_error("round_to_paths: walk stuck before t");
            const NodeId nxt = out.begin()->first;
            rem.subtract(cur, nxt);
            path.push_back(nxt);
            cur = nxt;
        }
        result.paths.push_back(std::move(path));
    }
    if (!rem.empty()) throw std::logic_error("round_to_paths: leftover flow after decomposition");
    return result;
}

PathSolution assemble_solution(const Metric& m, const IntFlow& p, const IntFlow& c, int k_prime,
                               NodeId s, NodeId t) {
    IntFlow combined = p;
    combined += c;
    combined.add(t, s, k_prime);
    if (!combined.is_circulation())
        throw std::logic_error("assemble_solution: P + C + B is not balanced");

    const std::vector<NodeId> circuit = eulerian_circuit(combined, s);

    // Shortcut: keep every s/t occurrence, first occurrence of anything else.
    std::set<NodeId> seen;
    std::vector<NodeId> walk;
    for (NodeId v : circuit) {
        if (v == s || v == t) {
            walk.push_back(v);
        } else if (!seen.count(v)) {
            seen.insert(v);
            walk.push_back(v);
        }
    }

    // The walk is s ... t s ... t ... s; every t is followed by s because
    // only the k' return arcs leave t.  Split at each t.
    PathSolution sol;
    sol.k_prime = k_prime;
    std::vector<NodeId> cur;
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) {  // final s closes the circuit
        cur.push_back(walk[i]);
        if (walk[i] == t) {
            sol.paths.push_back(cur);
            cur.clear();
        }
    }
    if (!cur.empty()) throw std::logic_error("assemble_solution: circuit did not end at t-s");
    if (static_cast<int>(sol.paths.size()) != k_prime)
        throw std::logic_error("assemble_solution: path count mismatch");

    for (const auto& path : sol.paths) {
        const Cost pc = m.path_cost(path);
        sol.total_cost += pc;
        sol.max_cost = std::max(sol.max_cost, pc);
    }
    return sol;
}

std::vector<std::set<NodeId>> weak_components(const IntFlow& f) {
    std::map<NodeId, NodeId> parent;
    std::function<NodeId(NodeId)> find = [&](NodeId v) -> NodeId {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    for (NodeId v : f.support_nodes()) parent[v] = v;
    for (const auto& [arc, units] : f.arcs()) {
        const NodeId a = find(arc.first), b = find(arc.second);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::map<NodeId, std::set<NodeId>> groups;
    for (const auto& [v, ignored] : parent) groups[find(v)].insert(v);
    std::vector<std::set<NodeId>> components;
    for (auto& [root, nodes] : groups) components.push_back(std::move(nodes));
    return components;  // map order = ascending smallest member
}

std::vector<NodeId> eulerian_circuit(const IntFlow& f, NodeId start) {
    std::map<NodeId, std::map<NodeId, long long>> adj;
    long long total = 0;
    for (const auto& [arc, units] : f.arcs()) {
        adj[arc.first][arc.second] += units;
        total += units;
    }
    long long used = 0;
    std::vector<NodeId> stack{start};
    std::vector<NodeId> out;
    while (!stack.empty()) {
        const NodeId v = stack.back();
        auto& targets = adj[v];
        if (targets.empty()) {
            out.push_back(v);
            stack.pop_back();
            continue;
        }
        auto it = targets.begin();
        const NodeId u = it->first;
        if (--it->second == 0) targets.erase(it);
        ++used;
        stack.push_back(u);
    }
    if (used != total)
        throw std::logic_error("eulerian_circuit: support is not connected to the start node");
    std::reverse(out.begin(), out.end());
    return out;
}

KatsppResult solve_katspp(const KatsppInstance& inst) {
    validate_instance(inst);
    const Metric& m = inst.metric;
    const int n = m.size();
    const NodeId s = inst.s, t = inst.t;
    const int k = inst.k;
    const long long big_l = static_cast<long long>(inst.b + 1) * floor_log2(n);
    const long long log_bound = floor_log2(n);

    std::set<NodeId> w;
    for (NodeId v = 0; v < n; ++v) w.insert(v);
    std::map<NodeId, long long> l;
    for (NodeId v = 0; v < n; ++v)
        if (v != s && v != t) l[v] = 0;

    KatsppResult result;
    result.trace.big_l = big_l;
    IntFlow f, c;

    for (long long iter = 0; iter < big_l; ++iter) {
        const CoverResult cover = min_cost_kpath_cycle_cover(m, w, s, t, k);
        result.lower_bound = std::max(result.lower_bound, cover.cost);

        f += cover.flow;
        auto [acyclic, h] = extract_circulation(f);
        f = std::move(acyclic);
        if (!f.is_acyclic()) throw std::logic_error("solve_katspp: F still cyclic after step 9");

        IterationRecord rec;
        rec.cover_cost = cover.cost;
        const auto components = weak_components(h);
        rec.circulation_components = static_cast<int>(components.size());
        for (const auto& comp : components) {
            const NodeId rep = choose_representative(comp, h, l);
            for (NodeId v : comp) {
                if (v == rep) continue;
                f = shortcut_node(f, v);
                w.erase(v);
                l.erase(v);
                rec.discarded.push_back(v);
            }
            l[rep] += h.outdeg(rep);
            if (l[rep] > log_bound)
                throw std::logic_error("solve_katspp: potential exceeds floor(log2 n)");
        }
        c += h;
        rec.f_after = f;
        rec.l_after = l;
        result.trace.iterations.push_back(std::move(rec));
    }

    for (const auto& [v, lv] : l)
        if (f.outdeg(v) != big_l - lv)
            throw std::logic_error("solve_katspp: termination identity outdeg = L - l_v violated");

    result.trace.f_final = f;
    result.trace.w_final = w;
    result.trace.l_final = l;

    auto [f_uniform, gamma] = uniformize(f, l, big_l);
    result.trace.f_uniform = f_uniform;
    result.trace.gamma = gamma;

    const RoundResult rounded = round_to_paths(m, f_uniform, s, t, k, inst.b, big_l, gamma);
    result.trace.z = rounded.z;
    result.trace.k_prime = rounded.k_prime;
    result.trace.dmax_feasible = rounded.dmax_feasible;

    IntFlow p;
    for (const auto& path : rounded.paths)
        for (std::size_t i = 0; i + 1 < path.size(); ++i) p.add(path[i], path[i + 1]);

    result.solution = assemble_solution(m, p, c, rounded.k_prime, s, t);
    return result;
}

}  // namespace katspp
