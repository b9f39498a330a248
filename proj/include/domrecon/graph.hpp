#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace domrecon {

using Mask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }
constexpr Mask bit(int v) { return Mask{1} << v; }
constexpr int popcount(Mask m) { return std::popcount(m); }
constexpr int lowest(Mask m) { return std::countr_zero(m); }

// Calls f(v) for every set bit v of m, lowest first.
template <typename F>
void for_each_bit(Mask m, F&& f) {
    while (m != 0) {
        f(std::countr_zero(m));
        m &= m - 1;
    }
}

std::vector<int> bits_to_vector(Mask m);

/// A subset of the vertices of a host graph with at most 64 vertices.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(Mask bits, int n);
    static VertexSet of(std::initializer_list<int> vertices, int n);
    static VertexSet all(int n) { return VertexSet(full_mask(n), n); }

    Mask bits() const { return bits_; }
    int host_size() const { return n_; }
    int size() const { return popcount(bits_); }
    bool empty() const { return bits_ == 0; }
    bool contains(int v) const { return v >= 0 && v < n_ && ((bits_ >> v) & 1U) != 0; }
    bool subset_of(const VertexSet& o) const { return (bits_ & ~o.bits_) == 0; }
    std::vector<int> members() const { return bits_to_vector(bits_); }

    VertexSet operator|(const VertexSet& o) const { return {bits_ | o.bits_, n_}; }
    VertexSet operator&(const VertexSet& o) const { return {bits_ & o.bits_, n_}; }
    VertexSet operator-(const VertexSet& o) const { return {bits_ & ~o.bits_, n_}; }

    friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.bits_ == b.bits_; }
    friend auto operator<=>(const VertexSet& a, const VertexSet& b) { return a.bits_ <=> b.bits_; }

    // "{0,2,5}"
    std::string to_string() const;

private:
    Mask bits_ = 0;
    int n_ = 0;
};

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph on at most 64 vertices with one
/// neighbour mask per vertex.
class Graph {
public:
    Graph() = default;

    int order() const { return static_cast<int>(adj_.size()); }
    std::size_t size() const;  // edge count
    Mask neighbors(int v) const { return adj_[v]; }
    Mask closed_neighbors(int v) const { return adj_[v] | bit(v); }
    bool adjacent(int u, int v) const { return ((adj_[u] >> v) & 1U) != 0; }
    int degree(int v) const { return popcount(adj_[v]); }
    Mask vertices() const { return full_mask(order()); }
    std::vector<Edge> edges() const;

    const std::vector<std::string>& labels() const { return labels_; }
    bool has_labels() const { return !labels_.empty(); }
    Graph with_labels(std::vector<std::string> labels) const;

    // Structural equality; labels are ignored.
    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    friend Graph make_graph(int n, const std::vector<Edge>& edges);
    friend Graph graph_from_masks(std::vector<Mask> adj);

    std::vector<Mask> adj_;
    std::vector<std::string> labels_;
};

Graph make_graph(int n, const std::vector<Edge>& edges);
// Validates symmetry, irreflexivity and range before accepting.
Graph graph_from_masks(std::vector<Mask> adj);

/// Simple undirected graph of unbounded order with sorted adjacency lists.
/// Reconfiguration graphs and predicted constructions live here since
/// |M(G)| routinely exceeds 64.
class SparseGraph {
public:
    SparseGraph() = default;
    SparseGraph(int n, const std::vector<Edge>& edges);

    int order() const { return static_cast<int>(adj_.size()); }
    std::size_t size() const { return edge_count_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(int u, int v) const;
    std::vector<Edge> edges() const;

    const std::vector<std::string>& labels() const { return labels_; }
    bool has_labels() const { return !labels_.empty(); }
    SparseGraph with_labels(std::vector<std::string> labels) const;

    friend bool operator==(const SparseGraph& a, const SparseGraph& b) { return a.adj_ == b.adj_; }

private:
    std::vector<std::vector<int>> adj_;
    std::size_t edge_count_ = 0;
    std::vector<std::string> labels_;
};

SparseGraph to_sparse(const Graph& g);
// Throws SizeLimit when the order exceeds 64.
Graph to_dense(const SparseGraph& g);

// ---- constructions -------------------------------------------------------

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);

struct Reduced {
    Graph graph;
    std::vector<int> old_to_new;  // -1 for deleted vertices
    std::vector<int> new_to_old;
};

Reduced induced_subgraph(const Graph& g, Mask keep);
// G - N[S]; the index map is order preserving.
Reduced delete_closed_neighborhood(const Graph& g, const VertexSet& s);

Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);
// Vertex (u,v) has index u*order(h)+v.
Graph cartesian_product(const Graph& g, const Graph& h);
Graph complement(const Graph& g);

SparseGraph disjoint_union(const SparseGraph& g, const SparseGraph& h);
SparseGraph join(const SparseGraph& g, const SparseGraph& h);
SparseGraph cartesian_product(const SparseGraph& g, const SparseGraph& h);
SparseGraph complete_sparse(int n);
SparseGraph empty_sparse(int n);

// ---- metrics -------------------------------------------------------------

// nullopt encodes an infinite distance or girth.
using Extent = std::optional<int>;

struct Metrics {
    std::vector<std::vector<int>> components;  // sorted, ordered by least vertex
    Extent diameter;
    Extent girth;
    int min_degree = 0;
    int max_degree = 0;
};

Metrics metrics(const SparseGraph& g);
Metrics metrics(const Graph& g);

std::vector<std::vector<int>> components(const SparseGraph& g);
bool is_connected(const SparseGraph& g);
Extent diameter(const SparseGraph& g);
Extent girth(const SparseGraph& g);
bool is_tree(const SparseGraph& g);
bool is_edgeless(const SparseGraph& g);
bool is_complete(const SparseGraph& g);
bool is_independent(const Graph& g, Mask s);
Mask universal_vertices(const Graph& g);
Mask isolated_vertices(const Graph& g);

}  // namespace domrecon
