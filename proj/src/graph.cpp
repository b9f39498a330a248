#include "domrecon/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "domrecon/errors.hpp"

namespace domrecon {

namespace {

void check_order(long long n) {
    if (n < 0) throw InvalidGraph("negative vertex count");
    if (n > kMaxVertices) {
        throw SizeLimit("graph order " + std::to_string(n) + " exceeds the 64-vertex cap");
    }
}

std::string label_or_index(const std::vector<std::string>& labels, int v) {
    return labels.empty() ? std::to_string(v) : labels[v];
}

template <typename G>
std::vector<std::string> concat_labels(const G& g, const G& h) {
    if (!g.has_labels() && !h.has_labels()) return {};
    std::vector<std::string> out;
    for (int v = 0; v < g.order(); ++v) out.push_back(label_or_index(g.labels(), v));
    for (int v = 0; v < h.order(); ++v) out.push_back(label_or_index(h.labels(), v));
    return out;
}

template <typename G>
std::vector<std::string> pair_labels(const G& g, const G& h) {
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(g.order()) * h.order());
    for (int u = 0; u < g.order(); ++u) {
        for (int v = 0; v < h.order(); ++v) {
            out.push_back("(" + label_or_index(g.labels(), u) + "," + label_or_index(h.labels(), v) + ")");
        }
    }
    return out;
}

}  // namespace

std::vector<int> bits_to_vector(Mask m) {
    std::vector<int> out;
    out.reserve(popcount(m));
    for_each_bit(m, [&](int v) { out.push_back(v); });
    return out;
}

VertexSet::VertexSet(Mask bits, int n) : bits_(bits), n_(n) {
    check_order(n);
    if ((bits & ~full_mask(n)) != 0) throw InvalidGraph("vertex set exceeds its host graph");
}

VertexSet VertexSet::of(std::initializer_list<int> vertices, int n) {
    Mask m = 0;
    for (int v : vertices) {
        if (v < 0 || v >= n) throw InvalidGraph("vertex " + std::to_string(v) + " out of range");
        m |= bit(v);
    }
    return {m, n};
}

std::string VertexSet::to_string() const {
    std::string s = "{";
    bool first = true;
    for_each_bit(bits_, [&](int v) {
        if (!first) s += ',';
        s += std::to_string(v);
        first = false;
    });
    return s + "}";
}

// ---- Graph ---------------------------------------------------------------

std::size_t Graph::size() const {
    std::size_t twice = 0;
    for (Mask m : adj_) twice += popcount(m);
    return twice / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < order(); ++u) {
        for_each_bit(adj_[u] & ~full_mask(u + 1), [&](int v) { out.emplace_back(u, v); });
    }
    return out;
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
    if (!labels.empty() && static_cast<int>(labels.size()) != order()) {
        throw InvalidGraph("label count does not match graph order");
    }
    Graph g = *this;
    g.labels_ = std::move(labels);
    return g;
}

Graph make_graph(int n, const std::vector<Edge>& edges) {
    check_order(n);
    Graph g;
    g.adj_.assign(n, 0);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw InvalidGraph("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        }
        if (u == v) throw InvalidGraph("loop at vertex " + std::to_string(u));
        g.adj_[u] |= bit(v);
        g.adj_[v] |= bit(u);
    }
    return g;
}

Graph graph_from_masks(std::vector<Mask> adj) {
    const int n = static_cast<int>(adj.size());
    check_order(n);
    for (int v = 0; v < n; ++v) {
        if ((adj[v] & ~full_mask(n)) != 0) throw InvalidGraph("neighbour mask exceeds graph order");
        if ((adj[v] & bit(v)) != 0) throw InvalidGraph("loop at vertex " + std::to_string(v));
        bool symmetric = true;
        for_each_bit(adj[v], [&](int u) { symmetric = symmetric && ((adj[u] >> v) & 1U) != 0; });
        if (!symmetric) throw InvalidGraph("asymmetric adjacency at vertex " + std::to_string(v));
    }
    Graph g;
    g.adj_ = std::move(adj);
    return g;
}

// ---- SparseGraph -----------------------------------------------------------

SparseGraph::SparseGraph(int n, const std::vector<Edge>& edges) {
    if (n < 0) throw InvalidGraph("negative vertex count");
    adj_.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw InvalidGraph("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        }
        if (u == v) throw InvalidGraph("loop at vertex " + std::to_string(u));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    std::size_t twice = 0;
    for (auto& list : adj_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        twice += list.size();
    }
    edge_count_ = twice / 2;
}

bool SparseGraph::adjacent(int u, int v) const {
    const auto& list = adj_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> SparseGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (int u = 0; u < order(); ++u) {
        for (int v : adj_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

SparseGraph SparseGraph::with_labels(std::vector<std::string> labels) const {
    if (!labels.empty() && static_cast<int>(labels.size()) != order()) {
        throw InvalidGraph("label count does not match graph order");
    }
    SparseGraph g = *this;
    g.labels_ = std::move(labels);
    return g;
}

SparseGraph to_sparse(const Graph& g) {
    return SparseGraph(g.order(), g.edges()).with_labels(g.labels());
}

Graph to_dense(const SparseGraph& g) {
    return make_graph(g.order(), g.edges()).with_labels(g.labels());
}

// ---- constructions -------------------------------------------------------

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
    Mask out = 0;
    for_each_bit(s.bits(), [&](int v) { out |= g.closed_neighbors(v); });
    return {out, g.order()};
}

Reduced induced_subgraph(const Graph& g, Mask keep) {
    keep &= g.vertices();
    Reduced r;
    r.old_to_new.assign(g.order(), -1);
    for_each_bit(keep, [&](int v) {
        r.old_to_new[v] = static_cast<int>(r.new_to_old.size());
        r.new_to_old.push_back(v);
    });
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) {
        if (r.old_to_new[u] >= 0 && r.old_to_new[v] >= 0) edges.emplace_back(r.old_to_new[u], r.old_to_new[v]);
    }
    r.graph = make_graph(static_cast<int>(r.new_to_old.size()), edges);
    if (g.has_labels()) {
        std::vector<std::string> labels;
        for (int v : r.new_to_old) labels.push_back(g.labels()[v]);
        r.graph = r.graph.with_labels(std::move(labels));
    }
    return r;
}

Reduced delete_closed_neighborhood(const Graph& g, const VertexSet& s) {
    return induced_subgraph(g, g.vertices() & ~closed_neighborhood(g, s).bits());
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    const int n = g.order();
    check_order(static_cast<long long>(n) + h.order());
    std::vector<Edge> edges = g.edges();
    for (auto [u, v] : h.edges()) edges.emplace_back(u + n, v + n);
    return make_graph(n + h.order(), edges).with_labels(concat_labels(g, h));
}

Graph join(const Graph& g, const Graph& h) {
    const int n = g.order();
    check_order(static_cast<long long>(n) + h.order());
    std::vector<Edge> edges = g.edges();
    for (auto [u, v] : h.edges()) edges.emplace_back(u + n, v + n);
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < h.order(); ++v) edges.emplace_back(u, v + n);
    }
    return make_graph(n + h.order(), edges).with_labels(concat_labels(g, h));
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    const long long total = static_cast<long long>(g.order()) * h.order();
    check_order(total);
    const int nh = h.order();
    std::vector<Edge> edges;
    for (int u = 0; u < g.order(); ++u) {
        for (auto [a, b] : h.edges()) edges.emplace_back(u * nh + a, u * nh + b);
    }
    for (auto [a, b] : g.edges()) {
        for (int v = 0; v < nh; ++v) edges.emplace_back(a * nh + v, b * nh + v);
    }
    return make_graph(static_cast<int>(total), edges).with_labels(pair_labels(g, h));
}

Graph complement(const Graph& g) {
    std::vector<Mask> adj(g.order());
    for (int v = 0; v < g.order(); ++v) adj[v] = g.vertices() & ~g.closed_neighbors(v);
    return graph_from_masks(std::move(adj)).with_labels(g.labels());
}

SparseGraph disjoint_union(const SparseGraph& g, const SparseGraph& h) {
    const int n = g.order();
    std::vector<Edge> edges = g.edges();
    for (auto [u, v] : h.edges()) edges.emplace_back(u + n, v + n);
    return SparseGraph(n + h.order(), edges).with_labels(concat_labels(g, h));
}

SparseGraph join(const SparseGraph& g, const SparseGraph& h) {
    const int n = g.order();
    std::vector<Edge> edges = g.edges();
    for (auto [u, v] : h.edges()) edges.emplace_back(u + n, v + n);
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < h.order(); ++v) edges.emplace_back(u, v + n);
    }
    return SparseGraph(n + h.order(), edges).with_labels(concat_labels(g, h));
}

SparseGraph cartesian_product(const SparseGraph& g, const SparseGraph& h) {
    const int nh = h.order();
    std::vector<Edge> edges;
    const auto he = h.edges();
    for (int u = 0; u < g.order(); ++u) {
        for (auto [a, b] : he) edges.emplace_back(u * nh + a, u * nh + b);
    }
    for (auto [a, b] : g.edges()) {
        for (int v = 0; v < nh; ++v) edges.emplace_back(a * nh + v, b * nh + v);
    }
    return SparseGraph(g.order() * nh, edges).with_labels(pair_labels(g, h));
}

SparseGraph complete_sparse(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    }
    return SparseGraph(n, edges);
}

SparseGraph empty_sparse(int n) { return SparseGraph(n, {}); }

// ---- metrics -------------------------------------------------------------

namespace {

// Distances from src; -1 for unreachable.
std::vector<int> bfs(const SparseGraph& g, int src) {
    std::vector<int> dist(g.order(), -1);
    std::deque<int> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(u)) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

}  // namespace

std::vector<std::vector<int>> components(const SparseGraph& g) {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(g.order(), false);
    for (int s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        std::vector<int> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int w : g.neighbors(u)) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const SparseGraph& g) { return components(g).size() <= 1; }

Extent diameter(const SparseGraph& g) {
    int best = 0;
    for (int s = 0; s < g.order(); ++s) {
        for (int d : bfs(g, s)) {
            if (d < 0) return std::nullopt;
            best = std::max(best, d);
        }
    }
    return best;
}

// Shortest cycle through BFS trees: a non-tree edge (u,w) seen from root s
// closes a closed walk of length dist[u]+dist[w]+1; the minimum over all
// roots is the girth.
Extent girth(const SparseGraph& g) {
    int best = -1;
    const int n = g.order();
    std::vector<int> dist(n), parent(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::deque<int> queue{s};
        dist[s] = 0;
        parent[s] = -1;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            if (best >= 0 && 2 * dist[u] + 1 >= best) break;
            for (int w : g.neighbors(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (parent[u] != w) {
                    int len = dist[u] + dist[w] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

Metrics metrics(const SparseGraph& g) {
    Metrics m;
    m.components = components(g);
    m.diameter = diameter(g);
    m.girth = girth(g);
    for (int v = 0; v < g.order(); ++v) {
        m.min_degree = v == 0 ? g.degree(v) : std::min(m.min_degree, g.degree(v));
        m.max_degree = std::max(m.max_degree, g.degree(v));
    }
    return m;
}

Metrics metrics(const Graph& g) { return metrics(to_sparse(g)); }

bool is_tree(const SparseGraph& g) {
    return g.order() >= 1 && g.size() + 1 == static_cast<std::size_t>(g.order()) && is_connected(g);
}

bool is_edgeless(const SparseGraph& g) { return g.size() == 0; }

bool is_complete(const SparseGraph& g) {
    const auto n = static_cast<std::size_t>(g.order());
    return g.size() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

bool is_independent(const Graph& g, Mask s) {
    bool ok = true;
    for_each_bit(s, [&](int v) { ok = ok && (g.neighbors(v) & s) == 0; });
    return ok;
}

Mask universal_vertices(const Graph& g) {
    Mask out = 0;
    for (int v = 0; v < g.order(); ++v) {
        if (g.closed_neighbors(v) == g.vertices()) out |= bit(v);
    }
    return out;
}

Mask isolated_vertices(const Graph& g) {
    Mask out = 0;
    for (int v = 0; v < g.order(); ++v) {
        if (g.neighbors(v) == 0) out |= bit(v);
    }
    return out;
}

}  // namespace domrecon
