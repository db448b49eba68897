#include "katspp/metric.hpp"

#include <random>
#include <set>
#include <stdexcept>
#include <string>

namespace katspp {

namespace {

void validate_matrix(const CostMatrix& m) {
    const std::size_t n = m.size();
    if (n < 2) throw std::invalid_argument("metric needs at least 2 nodes");
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw std::invalid_argument("cost matrix is not square");
        if (m[i][i] != 0) throw std::invalid_argument("cost matrix diagonal must be zero");
        for (std::size_t j = 0; j < n; ++j) {
            if (m[i][j] < 0) throw std::invalid_argument("cost matrix entries must be nonnegative");
        }
    }
}

void close_in_place(CostMatrix& m) {
    const int n = static_cast<int>(m.size());
    for (int w = 0; w < n; ++w)
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (m[u][w] + m[w][v] < m[u][v]) m[u][v] = m[u][w] + m[w][v];
}

bool triangle_holds(const CostMatrix& m) {
    const int n = static_cast<int>(m.size());
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            for (int w = 0; w < n; ++w)
                if (m[u][w] + m[w][v] < m[u][v]) return false;
    return true;
}

}  // namespace

Metric::Metric(CostMatrix m) : cost_(std::move(m)) {
    big_ = 1;
    for (const auto& row : cost_)
        for (Cost c : row) big_ += c;
}

Metric Metric::from_raw(CostMatrix raw) {
    validate_matrix(raw);
    close_in_place(raw);
    return Metric(std::move(raw));
}

Metric Metric::from_closed(CostMatrix closed) {
    validate_matrix(closed);
    if (!triangle_holds(closed))
        throw std::invalid_argument("matrix violates the directed triangle inequality");
    return Metric(std::move(closed));
}

bool Metric::is_symmetric() const {
    const int n = size();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (cost_[u][v] != cost_[v][u]) return false;
    return true;
}

Cost Metric::path_cost(const std::vector<NodeId>& path) const {
    Cost total = 0;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) total += cost_[path[i]][path[i + 1]];
    return total;
}

Metric metric_closure(const CostMatrix& raw) { return Metric::from_raw(raw); }

std::pair<Metric, NodeId> duplicate_node(const Metric& m, NodeId v) {
    if (!m.valid_node(v)) throw std::invalid_argument("duplicate_node: node out of range");
    const int n = m.size();
    CostMatrix ext(n + 1, std::vector<Cost>(n + 1, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) ext[i][j] = m.at(i, j);
    for (int x = 0; x < n; ++x) {
        ext[n][x] = m.at(v, x);
        ext[x][n] = m.at(x, v);
    }
    ext[n][v] = 0;
    ext[v][n] = 0;
    ext[n][n] = 0;
    // The copy inherits v's triangles, so the extension is already closed.
    return {Metric::from_closed(std::move(ext)), n};
}

void validate_instance(const KatsppInstance& inst) {
    if (!inst.metric.valid_node(inst.s) || !inst.metric.valid_node(inst.t))
        throw std::invalid_argument("instance endpoints out of range");
    if (inst.s == inst.t) throw std::invalid_argument("instance requires s != t");
    if (inst.k < 1) throw std::invalid_argument("instance requires k >= 1");
    if (inst.b < 1) throw std::invalid_argument("instance requires b >= 1");
}

void validate_instance(const GeneralInstance& inst) {
    if (inst.pairs.empty()) throw std::invalid_argument("general instance requires k >= 1");
    for (const auto& [s, t] : inst.pairs) {
        if (!inst.metric.valid_node(s) || !inst.metric.valid_node(t))
            throw std::invalid_argument("general instance endpoint out of range");
    }
}

KatsppInstance gen_gap_instance(int m_pairs) {
    if (m_pairs < 1) throw std::invalid_argument("gen_gap_instance requires m_pairs >= 1");
    const int n = m_pairs + 2;
    const NodeId s = 0, t = m_pairs + 1;
    CostMatrix raw(n, std::vector<Cost>(n, 1));
    for (int i = 0; i < n; ++i) raw[i][i] = 0;
    for (int v = 1; v <= m_pairs; ++v) {
        raw[s][v] = 0;
        raw[v][t] = 0;
    }
    return KatsppInstance{Metric::from_raw(std::move(raw)), s, t, m_pairs, 1};
}

Metric gen_random_metric(int n, std::uint64_t seed, Cost max_cost) {
    if (n < 2) throw std::invalid_argument("gen_random_metric requires n >= 2");
    if (max_cost < 1) throw std::invalid_argument("gen_random_metric requires max_cost >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Cost> draw(0, max_cost);
    CostMatrix raw(n, std::vector<Cost>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) raw[i][j] = draw(rng);
    return Metric::from_raw(std::move(raw));
}

Metric gen_random_symmetric_metric(int n, std::uint64_t seed, Cost max_cost) {
    if (n < 2) throw std::invalid_argument("gen_random_symmetric_metric requires n >= 2");
    if (max_cost < 1) throw std::invalid_argument("gen_random_symmetric_metric requires max_cost >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Cost> draw(0, max_cost);
    CostMatrix raw(n, std::vector<Cost>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) raw[i][j] = raw[j][i] = draw(rng);
    return Metric::from_raw(std::move(raw));
}

}  // namespace katspp
