#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "katspp/cover.hpp"
#include "katspp/flow.hpp"
#include "katspp/metric.hpp"
#include "katspp/types.hpp"

namespace katspp {

// Bicriteria solver for the k s-t path cover problem in asymmetric metrics.
// The main loop accumulates L = (b+1) * floor(log2 n) minimum-cost
// k-path/cycle covers, repeatedly splitting the accumulated flow into an
// acyclic part F and discarded circulations C while tracking a per-node
// discard potential l_v.  Afterwards F is made throughput-uniform, rounded
// to an integral flow of value k' in [k, k + k/b], decomposed into paths,
// and the discarded circulations are grafted back via one Eulerian circuit.

struct IterationRecord {
    Cost cover_cost = 0;
    std::vector<NodeId> discarded;
    int circulation_components = 0;
    IntFlow f_after;                     // F at the end of the iteration
    std::map<NodeId, long long> l_after; // potentials of still-active internal nodes
};

struct SolveTrace {
    long long big_l = 0;  // L
    long long gamma = 0;
    int k_prime = 0;
    bool dmax_feasible = false;
    std::vector<IterationRecord> iterations;
    IntFlow f_final;
    IntFlow f_uniform;
    IntFlow z;
    std::set<NodeId> w_final;
    std::map<NodeId, long long> l_final;
};

struct KatsppResult {
    PathSolution solution;
    Cost lower_bound = 0;  // best per-iteration cover cost; never exceeds OPT
    SolveTrace trace;
};

// Splits f into (acyclic remainder, circulation).  Cycles in the support are
// cancelled one unit at a time until none remain; the two parts sum back to
// f as arc multisets.
std::pair<IntFlow, IntFlow> extract_circulation(const IntFlow& f);

// Representative of a circulation component: minimizes l_u plus the
// component-internal out-multiplicity of u, ties to the smallest id.
NodeId choose_representative(const std::set<NodeId>& component, const IntFlow& h,
                             const std::map<NodeId, long long>& l);

// Reroutes all flow through w so its degree drops to zero, pairing incoming
// and outgoing arcs in ascending node order.  Requires conservation at w;
// cost never increases and acyclicity is preserved.
IntFlow shortcut_node(const IntFlow& f, NodeId w);

// Equalizes internal throughputs at L - gamma where gamma = max l_v, using
// unit shortcuts.  Expects the loop-termination identity
// outdeg(v) == L - l_v for every key of l.
std::pair<IntFlow, long long> uniformize(const IntFlow& f, const std::map<NodeId, long long>& l,
                                         long long big_l);

struct RoundResult {
    std::vector<std::vector<NodeId>> paths;
    int k_prime = 0;
    IntFlow z;
    bool dmax_feasible = false;
};

// Finds the smallest integral flow value D in [k, floor(kL/(L-gamma))] for
// which a flow z with unit internal throughput and z <= f_uniform arc-wise
// exists, picking a cheap z by min-cost flow, and decomposes it into D
// paths.  Feasibility at the upper end is checked unconditionally.
RoundResult round_to_paths(const Metric& m, const IntFlow& f_uniform, NodeId s, NodeId t, int k,
                           int b, long long big_l, long long gamma);

// Grafts the discarded circulations back: P + C + k' arcs (t,s) form a
// circulation whose Eulerian circuit, shortcut past repeated nodes, splits
// into k' s-t paths partitioning all covered nodes.
PathSolution assemble_solution(const Metric& m, const IntFlow& p, const IntFlow& c, int k_prime,
                               NodeId s, NodeId t);

KatsppResult solve_katspp(const KatsppInstance& inst);

// floor(log2 n) for n >= 1.
long long floor_log2(long long n);

// Weakly connected components of a flow's support, ordered by smallest node.
std::vector<std::set<NodeId>> weak_components(const IntFlow& f);

// Eulerian circuit of a circulation starting at `start`, visiting each arc
// exactly its multiplicity.  Throws if the support is not connected to start.
std::vector<NodeId> eulerian_circuit(const IntFlow& f, NodeId start);

}  // namespace katspp
