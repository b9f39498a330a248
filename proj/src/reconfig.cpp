#include "domrecon/reconfig.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "domrecon/errors.hpp"

namespace domrecon {

bool mds_adjacent(const Graph& g, const VertexSet& m1, const VertexSet& m2) {
    if (!is_minimal_dominating(g, m1)) throw NotMinimal(m1.to_string() + " is not a minimal dominating set");
    if (!is_minimal_dominating(g, m2)) throw NotMinimal(m2.to_string() + " is not a minimal dominating set");
    return expansion_adjacent(g, m1.bits(), m2.bits());
}

namespace {

// Appends the edges (i, j), j > i, of row i.
void scan_row(const Graph& g, const std::vector<Mask>& sets, std::size_t i, ReconfigKind kind,
              std::vector<Edge>& out) {
    const Mask a = sets[i];
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
        const Mask b = sets[j];
        const Mask only_a = a & ~b;
        const Mask only_b = b & ~a;
        // Neither difference is a singleton: no witness can exist.
        if (popcount(only_a) != 1 && popcount(only_b) != 1) continue;
        const bool hit = kind == ReconfigKind::Full ? expansion_adjacent(g, a, b) : slide_adjacent(g, a, b);
        if (hit) out.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
}

std::vector<std::string> set_labels(const MdsCollection& sets) {
    std::vector<std::string> labels;
    labels.reserve(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i) labels.push_back(sets[i].to_string());
    return labels;
}

}  // namespace

std::vector<Edge> reconfig_edges_serial(const Graph& g, const MdsCollection& sets, ReconfigKind kind) {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < sets.size(); ++i) scan_row(g, sets.masks(), i, kind, out);
    return out;
}

std::vector<Edge> reconfig_edges_parallel(const Graph& g, const MdsCollection& sets, ReconfigKind kind,
                                          int threads) {
    const auto rows = static_cast<long long>(sets.size());
    std::vector<std::vector<Edge>> per_row(sets.size());
#pragma omp parallel for schedule(dynamic, 16) num_threads(std::max(1, threads))
    for (long long i = 0; i < rows; ++i) scan_row(g, sets.masks(), static_cast<std::size_t>(i), kind, per_row[i]);
    std::vector<Edge> out;
    for (auto& row : per_row) out.insert(out.end(), row.begin(), row.end());
    return out;
}

ReconfigGraph reconfig_from_sets(const Graph& g, MdsCollection sets, ReconfigKind kind, int threads) {
    ReconfigGraph r;
    r.base = g;
    r.kind = kind;
    const auto edges =
        threads > 1 ? reconfig_edges_parallel(g, sets, kind, threads) : reconfig_edges_serial(g, sets, kind);
    r.edges = SparseGraph(static_cast<int>(sets.size()), edges).with_labels(set_labels(sets));
    r.vertices = std::move(sets);
    return r;
}

ReconfigGraph build_reconfig_graph(const Graph& g, const ReconfigOptions& opts) {
    return reconfig_from_sets(g, enumerate_mds(g, opts.enumeration), ReconfigKind::Full, opts.threads);
}

ReconfigGraph build_gamma_graph(const Graph& g, const ReconfigOptions& opts) {
    return reconfig_from_sets(g, minimum_mds(g, opts.enumeration), ReconfigKind::Gamma, opts.threads);
}

SparseGraph induced(const SparseGraph& g, const std::vector<int>& keep) {
    std::vector<int> position(g.order(), -1);
    for (std::size_t k = 0; k < keep.size(); ++k) position[keep[k]] = static_cast<int>(k);
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) {
        if (position[u] >= 0 && position[v] >= 0) edges.emplace_back(position[u], position[v]);
    }
    SparseGraph out(static_cast<int>(keep.size()), edges);
    if (g.has_labels()) {
        std::vector<std::string> labels;
        for (int v : keep) labels.push_back(g.labels()[v]);
        out = out.with_labels(std::move(labels));
    }
    return out;
}

}  // namespace domrecon
