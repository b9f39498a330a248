#pragma once

#include <optional>
#include <vector>

#include "domrecon/domination.hpp"
#include "domrecon/graph.hpp"

namespace domrecon {

enum class ReconfigKind { Full, Gamma };

// Vertex v witnessing M1 ~ M2: either M2-M1 = {v} with M1-M2 inside N(v),
// or M1-M2 = {v} with M2-M1 inside N(v). nullopt when the sets are not
// adjacent. No minimality check.
inline std::optional<int> adjacency_witness(const Graph& g, Mask m1, Mask m2) {
    const Mask only1 = m1 & ~m2;
    const Mask only2 = m2 & ~m1;
    if (popcount(only2) == 1) {
        const int v = lowest(only2);
        if ((only1 & ~g.neighbors(v)) == 0) return v;
    }
    if (popcount(only1) == 1) {
        const int v = lowest(only1);
        if ((only2 & ~g.neighbors(v)) == 0) return v;
    }
    return std::nullopt;
}

inline bool expansion_adjacent(const Graph& g, Mask m1, Mask m2) {
    return m1 != m2 && adjacency_witness(g, m1, m2).has_value();
}

// Token slide along an edge of g.
inline bool slide_adjacent(const Graph& g, Mask m1, Mask m2) {
    const Mask only1 = m1 & ~m2;
    const Mask only2 = m2 & ~m1;
    return popcount(only1) == 1 && popcount(only2) == 1 && g.adjacent(lowest(only1), lowest(only2));
}

// Expansion/contraction adjacency between two minimal dominating sets.
// Throws NotMinimal when either argument is not a minimal dominating set.
bool mds_adjacent(const Graph& g, const VertexSet& m1, const VertexSet& m2);

/// R(G) or the gamma-graph of G: one vertex per (minimal / minimum)
/// dominating set, in enumeration order.
struct ReconfigGraph {
    Graph base;
    MdsCollection vertices;
    SparseGraph edges;
    ReconfigKind kind = ReconfigKind::Full;

    int order() const { return edges.order(); }
};

struct ReconfigOptions {
    EnumerationOptions enumeration;
    int threads = 1;  // >1 selects the row-parallel adjacency kernel
};

// All-pairs adjacency over the given sets, i<j, rows in ascending i.
std::vector<Edge> reconfig_edges_serial(const Graph& g, const MdsCollection& sets, ReconfigKind kind);
std::vector<Edge> reconfig_edges_parallel(const Graph& g, const MdsCollection& sets, ReconfigKind kind, int threads);

ReconfigGraph build_reconfig_graph(const Graph& g, const ReconfigOptions& opts = {});
ReconfigGraph build_gamma_graph(const Graph& g, const ReconfigOptions& opts = {});
// Builds over a precomputed collection (which must be M(G) or its minimum part).
ReconfigGraph reconfig_from_sets(const Graph& g, MdsCollection sets, ReconfigKind kind, int threads = 1);

// Subgraph of r.edges induced by the given vertex indices, in that order.
SparseGraph induced(const SparseGraph& g, const std::vector<int>& keep);

}  // namespace domrecon
