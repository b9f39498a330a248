#pragma once

// Slow, definition-level reimplementations used as test oracles. They share
// nothing with the library beyond reading a graph's edge list.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "domrecon/graph.hpp"

namespace oracle {

using Set = std::set<int>;

struct Adj {
    int n = 0;
    std::vector<std::vector<bool>> a;

    explicit Adj(int order) : n(order), a(order, std::vector<bool>(order, false)) {}
    Adj(int order, const std::vector<std::pair<int, int>>& edges) : Adj(order) {
        for (auto [u, v] : edges) a[u][v] = a[v][u] = true;
    }
    explicit Adj(const domrecon::Graph& g) : Adj(g.order(), g.edges()) {}
    explicit Adj(const domrecon::SparseGraph& g) : Adj(g.order(), g.edges()) {}

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (a[u][v]) out.emplace_back(u, v);
        return out;
    }
};

inline bool dominating(const Adj& g, const Set& s) {
    for (int v = 0; v < g.n; ++v) {
        bool hit = s.count(v) > 0;
        for (int u : s) hit = hit || g.a[u][v];
        if (!hit) return false;
    }
    return true;
}

inline bool minimal_dominating(const Adj& g, const Set& s) {
    if (!dominating(g, s)) return false;
    for (int v : s) {
        Set t = s;
        t.erase(v);
        if (dominating(g, t)) return false;
    }
    return true;
}

inline Set set_of(std::uint64_t bits) {
    Set s;
    for (int v = 0; v < 64; ++v)
        if ((bits >> v) & 1U) s.insert(v);
    return s;
}

inline std::uint64_t bits_of(const Set& s) {
    std::uint64_t m = 0;
    for (int v : s) m |= std::uint64_t{1} << v;
    return m;
}

// Every subset, ascending by bit mask.
inline std::vector<Set> all_mds(const Adj& g) {
    std::vector<Set> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.n); ++m) {
        Set s = set_of(m);
        if (minimal_dominating(g, s)) out.push_back(s);
    }
    return out;
}

// Expansion/contraction adjacency straight from the definition.
inline bool r_adjacent(const Adj& g, const Set& m1, const Set& m2) {
    Set only1, only2;
    std::set_difference(m1.begin(), m1.end(), m2.begin(), m2.end(), std::inserter(only1, only1.end()));
    std::set_difference(m2.begin(), m2.end(), m1.begin(), m1.end(), std::inserter(only2, only2.end()));
    auto inside = [&](const Set& part, int v) {
        for (int u : part)
            if (!g.a[u][v]) return false;
        return true;
    };
    if (only2.size() == 1 && inside(only1, *only2.begin())) return true;
    if (only1.size() == 1 && inside(only2, *only1.begin())) return true;
    return false;
}

inline std::vector<std::pair<int, int>> r_edges(const Adj& g, const std::vector<Set>& sets) {
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j)
            if (r_adjacent(g, sets[i], sets[j])) out.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return out;
}

// Smallest upper-triangle string over all n! relabelings.
inline std::string brute_canon(const Adj& g) {
    std::vector<int> p(g.n);
    std::iota(p.begin(), p.end(), 0);
    std::string best;
    do {
        std::string s;
        for (int u = 0; u < g.n; ++u)
            for (int v = u + 1; v < g.n; ++v) s += g.a[p[u]][p[v]] ? '1' : '0';
        if (best.empty() || s < best) best = s;
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

inline bool brute_isomorphic(const Adj& g, const Adj& h) {
    if (g.n != h.n || g.edges().size() != h.edges().size()) return false;
    return brute_canon(g) == brute_canon(h);
}

inline std::vector<int> bfs(const Adj& g, int s) {
    std::vector<int> d(g.n, -1);
    std::queue<int> q;
    d[s] = 0;
    q.push(s);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v = 0; v < g.n; ++v) {
            if (g.a[u][v] && d[v] < 0) {
                d[v] = d[u] + 1;
                q.push(v);
            }
        }
    }
    return d;
}

inline int component_count(const Adj& g) {
    std::vector<bool> seen(g.n, false);
    int c = 0;
    for (int v = 0; v < g.n; ++v) {
        if (seen[v]) continue;
        ++c;
        auto d = bfs(g, v);
        for (int u = 0; u < g.n; ++u)
            if (d[u] >= 0) seen[u] = true;
    }
    return c;
}

// -1 for infinite.
inline int diameter(const Adj& g) {
    int best = 0;
    for (int v = 0; v < g.n; ++v) {
        for (int x : bfs(g, v)) {
            if (x < 0) return -1;
            best = std::max(best, x);
        }
    }
    return best;
}

// Shortest cycle by deleting each edge and measuring the detour; -1 if acyclic.
inline int girth(const Adj& g) {
    int best = -1;
    for (auto [u, v] : g.edges()) {
        Adj h = g;
        h.a[u][v] = h.a[v][u] = false;
        int d = bfs(h, u)[v];
        if (d >= 0 && (best < 0 || d + 1 < best)) best = d + 1;
    }
    return best;
}

// Does g contain an induced copy of pattern (brute force over injections)?
inline bool has_induced(const Adj& g, const Adj& pattern) {
    const int k = pattern.n;
    if (k > g.n) return false;
    std::vector<int> pick(k);
    std::vector<bool> used(g.n, false);
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == k) return true;
        for (int v = 0; v < g.n; ++v) {
            if (used[v]) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) ok = g.a[pick[j]][v] == pattern.a[j][i];
            if (!ok) continue;
            used[v] = true;
            pick[i] = v;
            if (self(self, i + 1)) return true;
            used[v] = false;
        }
        return false;
    };
    return rec(rec, 0);
}

inline Adj pattern(int n, std::vector<std::pair<int, int>> edges) { return Adj(n, edges); }

// Forbidden induced subgraph characterisations.
inline bool is_threshold(const Adj& g) {
    return !has_induced(g, pattern(4, {{0, 1}, {1, 2}, {2, 3}})) &&          // P4
           !has_induced(g, pattern(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})) &&  // C4
           !has_induced(g, pattern(4, {{0, 1}, {2, 3}}));                    // 2K2
}

inline bool is_split(const Adj& g) {
    return !has_induced(g, pattern(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})) &&
           !has_induced(g, pattern(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}})) &&
           !has_induced(g, pattern(4, {{0, 1}, {2, 3}}));
}

// Complete multipartite (a single part counts) iff no induced K1 u K2.
inline bool is_complete_multipartite(const Adj& g) { return !has_induced(g, pattern(3, {{1, 2}})); }

// Edges, if any, all lie in one component that is a star.
inline bool is_empty_plus_star(const Adj& g) {
    auto e = g.edges();
    if (e.empty()) return true;
    for (int c = 0; c < g.n; ++c) {
        bool all = true;
        for (auto [u, v] : e) all = all && (u == c || v == c);
        if (all) return true;
    }
    return false;
}

// Labelled random graph; used to drive properties.
inline domrecon::Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<domrecon::Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return domrecon::make_graph(n, edges);
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace oracle
