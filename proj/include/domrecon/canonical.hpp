#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "domrecon/graph.hpp"

namespace domrecon {

/// Canonical labelling of a graph.
///
/// `relabeling[v]` is the canonical index of input vertex v; applying it to
/// the input yields the canonical graph, whose graph6 text is `text`.
/// Isomorphic inputs produce identical `certificate` and `text`.
struct CanonicalForm {
    int order = 0;
    std::vector<std::uint64_t> certificate;  // sorted edges a*order+b, a<b
    std::string text;
    std::vector<int> relabeling;
};

inline constexpr int kDefaultCanonicalOrder = 4096;

CanonicalForm canonical_form(const SparseGraph& g, int max_order = kDefaultCanonicalOrder);
CanonicalForm canonical_form(const Graph& g);

bool isomorphic(const SparseGraph& g, const SparseGraph& h, int max_order = kDefaultCanonicalOrder);
bool isomorphic(const Graph& g, const Graph& h);

// perm[v] is the new index of v.
SparseGraph relabel(const SparseGraph& g, const std::vector<int>& perm);
Graph relabel(const Graph& g, const std::vector<int>& perm);

// Colour refinement to the coarsest equitable partition finer than
// `colour`. Colours are cell start positions in a label-invariant cell
// order. Exposed for tests.
void refine_partition(const SparseGraph& g, std::vector<int>& colour);

}  // namespace domrecon
