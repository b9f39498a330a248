#include "domrecon/families.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <set>

#include "domrecon/canonical.hpp"
#include "domrecon/errors.hpp"
#include "domrecon/graph_io.hpp"

namespace domrecon {

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw InvalidSpec("empty sampling range");
    // Rejection sampling keeps the draw exactly uniform.
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % bound;
}

bool Rng::chance(double p) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return u < p;
}

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw InvalidSpec(what);
}

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    }
    return make_graph(n, edges);
}

std::string pair_label(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

Graph multipartite(const std::vector<int>& parts) {
    require(!parts.empty(), "multipartite needs at least one part");
    long long total = 0;
    for (int p : parts) {
        require(p >= 1, "multipartite parts must be positive");
        total += p;
    }
    if (total > kMaxVertices) throw SizeLimit("multipartite graph exceeds the 64-vertex cap");
    std::vector<int> part_of;
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        for (int i = 0; i < parts[k]; ++i) {
            part_of.push_back(static_cast<int>(k));
            labels.push_back(std::to_string(k + 1));
        }
    }
    const int n = static_cast<int>(part_of.size());
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
        }
    }
    return make_graph(n, edges).with_labels(std::move(labels));
}

Graph rook_graph(int n) {
    require(n >= 0, "rook order must be non-negative");
    if (n * n > kMaxVertices) throw SizeLimit("rook's graph exceeds the 64-vertex cap");
    std::vector<Edge> edges;
    std::vector<std::string> labels;
    for (int a = 0; a < n * n; ++a) {
        labels.push_back(pair_label(a / n + 1, a % n + 1));
        for (int b = a + 1; b < n * n; ++b) {
            if (a / n == b / n || a % n == b % n) edges.emplace_back(a, b);
        }
    }
    return make_graph(n * n, edges).with_labels(std::move(labels));
}

Graph threshold_graph(const std::vector<ThresholdStep>& seq) {
    require(!seq.empty(), "threshold sequence must be nonempty");
    const int n = static_cast<int>(seq.size());
    if (n > kMaxVertices) throw SizeLimit("threshold graph exceeds the 64-vertex cap");
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) {
        if (seq[v] == ThresholdStep::Universal) {
            for (int u = 0; u < v; ++u) edges.emplace_back(u, v);
        }
    }
    return make_graph(n, edges);
}

// Uniform labelled tree from a random Pruefer sequence.
Graph random_tree(int n, std::uint64_t seed) {
    require(n >= 0, "tree order must be non-negative");
    if (n > kMaxVertices) throw SizeLimit("tree exceeds the 64-vertex cap");
    if (n <= 1) return make_graph(n, {});
    if (n == 2) return make_graph(2, {{0, 1}});
    Rng rng(seed);
    std::vector<int> code(n - 2);
    for (int& c : code) c = static_cast<int>(rng.below(n));
    std::vector<int> degree(n, 1);
    for (int c : code) ++degree[c];
    std::vector<Edge> edges;
    for (int c : code) {
        int leaf = 0;
        while (degree[leaf] != 1) ++leaf;
        edges.emplace_back(leaf, c);
        --degree[leaf];
        --degree[c];
    }
    int u = -1;
    for (int v = 0; v < n; ++v) {
        if (degree[v] == 1) {
            if (u < 0) {
                u = v;
            } else {
                edges.emplace_back(u, v);
                break;
            }
        }
    }
    return make_graph(n, edges);
}

Graph random_split(int n, int clique, double p, std::uint64_t seed) {
    require(n >= 0 && clique >= 0 && clique <= n, "split graph needs 0 <= clique <= n");
    require(p >= 0.0 && p <= 1.0, "edge probability must lie in [0,1]");
    if (n > kMaxVertices) throw SizeLimit("split graph exceeds the 64-vertex cap");
    Rng rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < clique; ++u) {
        for (int v = u + 1; v < clique; ++v) edges.emplace_back(u, v);
    }
    for (int u = 0; u < clique; ++u) {
        for (int v = clique; v < n; ++v) {
            if (rng.chance(p)) edges.emplace_back(u, v);
        }
    }
    return make_graph(n, edges);
}

Graph random_gnp(int n, double p, std::uint64_t seed) {
    require(n >= 0, "order must be non-negative");
    require(p >= 0.0 && p <= 1.0, "edge probability must lie in [0,1]");
    if (n > kMaxVertices) throw SizeLimit("graph exceeds the 64-vertex cap");
    Rng rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (rng.chance(p)) edges.emplace_back(u, v);
        }
    }
    return make_graph(n, edges);
}

Graph petersen() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);          // outer cycle
        edges.emplace_back(i, i + 5);                // spokes
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return make_graph(10, edges);
}

struct Visitor {
    Graph operator()(const family::Complete& s) const {
        require(s.n >= 0, "order must be non-negative");
        return complete_graph(s.n);
    }
    Graph operator()(const family::Empty& s) const {
        require(s.n >= 0, "order must be non-negative");
        return make_graph(s.n, {});
    }
    Graph operator()(const family::Path& s) const {
        require(s.n >= 0, "order must be non-negative");
        std::vector<Edge> edges;
        for (int v = 0; v + 1 < s.n; ++v) edges.emplace_back(v, v + 1);
        return make_graph(s.n, edges);
    }
    Graph operator()(const family::Cycle& s) const {
        require(s.n >= 3, "cycles need at least 3 vertices");
        std::vector<Edge> edges;
        for (int v = 0; v < s.n; ++v) edges.emplace_back(v, (v + 1) % s.n);
        return make_graph(s.n, edges);
    }
    Graph operator()(const family::Star& s) const {
        require(s.n >= 0, "order must be non-negative");
        std::vector<Edge> edges;
        for (int v = 1; v <= s.n; ++v) edges.emplace_back(0, v);
        return make_graph(s.n + 1, edges);
    }
    Graph operator()(const family::CompleteBipartite& s) const { return multipartite({s.m, s.n}); }
    Graph operator()(const family::CompleteMultipartite& s) const { return multipartite(s.parts); }
    Graph operator()(const family::Rook& s) const { return rook_graph(s.n); }
    Graph operator()(const family::FoldedRook& s) const { return folded_rook(s.n); }
    Graph operator()(const family::Afr& s) const { return afr(s.parts); }
    Graph operator()(const family::Threshold& s) const { return threshold_graph(s.seq); }
    Graph operator()(const family::MatchingJoin& s) const { return matching_join(s.g, s.h, s.matching); }
    Graph operator()(const family::RandomTree& s) const { return random_tree(s.n, s.seed); }
    Graph operator()(const family::RandomSplit& s) const {
        return random_split(s.n, s.clique, s.edge_prob, s.seed);
    }
    Graph operator()(const family::RandomGnp& s) const { return random_gnp(s.n, s.edge_prob, s.seed); }
    Graph operator()(const family::Petersen&) const { return petersen(); }
    Graph operator()(const family::Explicit& s) const { return s.g; }
};

}  // namespace

Graph generate(const FamilySpec& spec) { return std::visit(Visitor{}, spec); }

bool is_random_family(const FamilySpec& spec) {
    return std::holds_alternative<family::RandomTree>(spec) || std::holds_alternative<family::RandomSplit>(spec) ||
           std::holds_alternative<family::RandomGnp>(spec);
}

// ---- named constructions ---------------------------------------------------

Graph folded_rook(int n) {
    require(n >= 0, "folded rook order must be non-negative");
    if (n * (n + 1) / 2 > kMaxVertices) throw SizeLimit("folded rook's graph exceeds the 64-vertex cap");
    std::vector<std::pair<int, int>> cells;
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= i; ++j) {
            cells.emplace_back(i, j);
            labels.push_back(pair_label(i, j));
        }
    }
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < cells.size(); ++a) {
        for (std::size_t b = a + 1; b < cells.size(); ++b) {
            auto [i, j] = cells[a];
            auto [k, l] = cells[b];
            if (i == k || i == l || j == k || j == l) edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
        }
    }
    return make_graph(static_cast<int>(cells.size()), edges).with_labels(std::move(labels));
}

Graph afr(const std::vector<int>& parts) {
    require(!parts.empty(), "AFR needs at least one part");
    long long total = 0;
    for (int p : parts) {
        require(p >= 1, "AFR parts must be positive");
        total += p;
    }
    if (total > kMaxVertices) throw SizeLimit("AFR part total exceeds 64");
    // Elements 1..total, part k owning a consecutive block.
    std::vector<int> part_of(total + 1);
    for (int k = 0, next = 1; k < static_cast<int>(parts.size()); ++k) {
        for (int i = 0; i < parts[k]; ++i) part_of[next++] = k;
    }
    const int l = static_cast<int>(parts.size());
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= total; ++i) {
        for (int j = 1; j < i; ++j) {
            if (part_of[i] != part_of[j]) pairs.emplace_back(i, j);
        }
    }
    const long long n = l + static_cast<long long>(pairs.size());
    if (n > kMaxVertices) throw SizeLimit("AFR graph exceeds the 64-vertex cap");
    std::vector<std::string> labels;
    for (int k = 1; k <= l; ++k) labels.push_back(std::to_string(k));
    for (auto [i, j] : pairs) labels.push_back(pair_label(i, j));

    std::vector<Edge> edges;
    for (int k = 0; k < l; ++k) {
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            auto [i, j] = pairs[p];
            if (part_of[i] == k || part_of[j] == k) edges.emplace_back(k, l + static_cast<int>(p));
        }
    }
    for (std::size_t a = 0; a < pairs.size(); ++a) {
        for (std::size_t b = a + 1; b < pairs.size(); ++b) {
            auto [i, j] = pairs[a];
            auto [x, y] = pairs[b];
            const bool meet = i == x || i == y || j == x || j == y;
            // Same unordered pair of parts: the cross-product edges are removed.
            const bool same_block = std::minmax(part_of[i], part_of[j]) == std::minmax(part_of[x], part_of[y]);
            if (meet && !same_block) edges.emplace_back(l + static_cast<int>(a), l + static_cast<int>(b));
        }
    }
    return make_graph(static_cast<int>(n), edges).with_labels(std::move(labels));
}

Graph matching_join(const Graph& g, const Graph& h, const std::vector<int>& matching) {
    const int n = g.order();
    require(h.order() == n, "matching join needs graphs of equal order");
    std::vector<int> sigma = matching;
    if (sigma.empty()) {
        sigma.resize(n);
        std::iota(sigma.begin(), sigma.end(), 0);
    }
    require(static_cast<int>(sigma.size()) == n, "matching must have one entry per vertex");
    std::vector<int> sorted = sigma;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i) require(sorted[i] == i, "matching must be a permutation");
    if (2LL * n > kMaxVertices) throw SizeLimit("matching join exceeds the 64-vertex cap");
    std::vector<Edge> edges = g.edges();
    for (auto [u, v] : h.edges()) edges.emplace_back(u + n, v + n);
    for (int i = 0; i < n; ++i) edges.emplace_back(i, n + sigma[i]);
    return make_graph(2 * n, edges);
}

// ---- predicted reconfiguration graphs ---------------------------------------

SparseGraph predicted_rook_reconfig(int n) {
    require(n >= 1, "rook prediction needs n >= 1");
    require(n <= 5, "rook prediction supports n <= 5");
    long long tuples = 1;
    for (int i = 0; i < n; ++i) tuples *= n;
    auto digits = [&](long long t) {
        std::vector<int> d(n);
        for (int i = n - 1; i >= 0; --i) {
            d[i] = static_cast<int>(t % n);
            t /= n;
        }
        return d;
    };
    auto is_permutation = [&](long long t) {
        auto d = digits(t);
        std::sort(d.begin(), d.end());
        for (int i = 0; i < n; ++i) {
            if (d[i] != i) return false;
        }
        return true;
    };
    auto tuple_text = [&](long long t) {
        std::string s = "(";
        auto d = digits(t);
        for (int i = 0; i < n; ++i) s += (i ? "," : "") + std::to_string(d[i] + 1);
        return s + ")";
    };
    auto inverse = [&](long long t) {
        const auto d = digits(t);
        std::vector<int> inv(n);
        for (int i = 0; i < n; ++i) inv[d[i]] = i;
        long long out = 0;
        for (int x : inv) out = out * n + x;
        return out;
    };
    // Copy A lists sets by the column used in each row, copy B by the row
    // used in each column. A permutation set reads as p in A and as p^-1 in
    // B, so B's permutation vertices are A's vertices at the inverse tuple.
    std::vector<int> copy_b(tuples);
    std::vector<std::string> labels;
    for (long long t = 0; t < tuples; ++t) labels.push_back((is_permutation(t) ? "p" : "a") + tuple_text(t));
    int next = static_cast<int>(tuples);
    for (long long t = 0; t < tuples; ++t) {
        if (is_permutation(t)) {
            copy_b[t] = static_cast<int>(inverse(t));
        } else {
            copy_b[t] = next++;
            labels.push_back("b" + tuple_text(t));
        }
    }
    std::vector<Edge> edges;
    for (long long t = 0; t < tuples; ++t) {
        long long place = 1;
        for (int pos = 0; pos < n; ++pos, place *= n) {
            const long long digit = (t / place) % n;
            for (long long d = digit + 1; d < n; ++d) {
                const long long s = t + (d - digit) * place;  // differs from t in one coordinate
                edges.emplace_back(static_cast<int>(t), static_cast<int>(s));
                edges.emplace_back(copy_b[t], copy_b[s]);
            }
        }
    }
    return SparseGraph(next, edges).with_labels(std::move(labels));
}

Graph predicted_rook_reconfig_dense(int n) { return to_dense(predicted_rook_reconfig(n)); }

SparseGraph predicted_join_reconfig(const Graph& g, const Graph& h, const ReconfigGraph& rg,
                                    const ReconfigGraph& rh) {
    if (universal_vertices(g) != 0 || universal_vertices(h) != 0) {
        throw UniversalVertexPresent("join prediction requires both factors to lack universal vertices");
    }
    const int kg = rg.order();
    const int kh = rh.order();
    const int ng = g.order();
    const int nh = h.order();
    const int pairs_at = kg + kh;
    std::vector<Edge> edges;
    for (auto [a, b] : rg.edges.edges()) edges.emplace_back(a, b);
    for (auto [a, b] : rh.edges.edges()) edges.emplace_back(kg + a, kg + b);
    const SparseGraph product = cartesian_product(to_sparse(g), to_sparse(h));
    for (auto [a, b] : product.edges()) edges.emplace_back(pairs_at + a, pairs_at + b);
    for (int i = 0; i < kg; ++i) {
        for (int u = 0; u < ng; ++u) {
            if ((rg.vertices.mask(i) >> u) & 1U) {
                for (int v = 0; v < nh; ++v) edges.emplace_back(i, pairs_at + u * nh + v);
            }
        }
    }
    for (int i = 0; i < kh; ++i) {
        for (int v = 0; v < nh; ++v) {
            if ((rh.vertices.mask(i) >> v) & 1U) {
                for (int u = 0; u < ng; ++u) edges.emplace_back(kg + i, pairs_at + u * nh + v);
            }
        }
    }
    return SparseGraph(pairs_at + ng * nh, edges);
}

// ---- exhaustive graph generation -----------------------------------------

std::vector<Graph> graphs_of_order(int n) {
    if (n < 0) throw InvalidSpec("order must be non-negative");
    if (n > 7) throw SizeLimit("graph enumeration supports orders up to 7");
    if (n == 0) return {make_graph(0, {})};
    // Every graph on n vertices is some graph on n-1 vertices plus one
    // vertex, so extending each class representative in all 2^(n-1) ways
    // reaches every class.
    std::map<std::string, Graph> classes;
    for (const Graph& base : graphs_of_order(n - 1)) {
        const auto base_edges = base.edges();
        for (Mask nbrs = 0; nbrs < (Mask{1} << (n - 1)); ++nbrs) {
            auto edges = base_edges;
            for_each_bit(nbrs, [&](int u) { edges.emplace_back(u, n - 1); });
            const Graph g = make_graph(n, edges);
            CanonicalForm form = canonical_form(g);
            if (!classes.count(form.text)) classes.emplace(form.text, relabel(g, form.relabeling));
        }
    }
    std::vector<Graph> out;
    out.reserve(classes.size());
    for (auto& [text, g] : classes) out.push_back(std::move(g));
    return out;
}

std::vector<Graph> enumerate_graphs_upto(int n) {
    std::vector<Graph> out;
    for (int k = 1; k <= n; ++k) {
        auto part = graphs_of_order(k);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

// ---- recognisers ---------------------------------------------------------

std::optional<ThresholdInfo> threshold_decomposition(const Graph& g) {
    if (g.order() == 0) return std::nullopt;
    Mask alive = g.vertices();
    std::vector<ThresholdStep> removed;
    while (popcount(alive) > 1) {
        int pick = -1;
        ThresholdStep kind = ThresholdStep::Isolated;
        for_each_bit(alive, [&](int v) {
            if (pick >= 0) return;
            const Mask nbrs = g.neighbors(v) & alive;
            if (nbrs == 0) {
                pick = v;
                kind = ThresholdStep::Isolated;
            } else if (nbrs == (alive & ~bit(v))) {
                pick = v;
                kind = ThresholdStep::Universal;
            }
        });
        if (pick < 0) return std::nullopt;
        removed.push_back(kind);
        alive &= ~bit(pick);
    }
    ThresholdInfo info;
    info.sequence.push_back(ThresholdStep::Isolated);
    for (auto it = removed.rbegin(); it != removed.rend(); ++it) {
        info.sequence.push_back(*it);
        if (*it == ThresholdStep::Universal) ++info.universal_additions;
    }
    return info;
}

// Hammer-Simeone: with degrees d1 >= ... >= dn and m = max{i : d_i >= i-1},
// g is split iff sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i, and then the m
// highest-degree vertices form a maximum clique.
std::optional<SplitPartition> split_partition(const Graph& g) {
    const int n = g.order();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    int m = 0;
    for (int i = 1; i <= n; ++i) {
        if (g.degree(order[i - 1]) >= i - 1) m = i;
    }
    long long head = 0;
    long long tail = 0;
    for (int i = 0; i < n; ++i) (i < m ? head : tail) += g.degree(order[i]);
    if (head != static_cast<long long>(m) * (m - 1) + tail) return std::nullopt;
    SplitPartition p;
    for (int i = 0; i < n; ++i) (i < m ? p.clique : p.independent) |= bit(order[i]);
    return p;
}

bool is_complete_multipartite(const Graph& g) {
    // Non-adjacency must be an equivalence relation: non-neighbours share
    // their neighbourhoods.
    for (int u = 0; u < g.order(); ++u) {
        const Mask others = g.vertices() & ~g.closed_neighbors(u);
        bool ok = true;
        for_each_bit(others, [&](int v) { ok = ok && g.neighbors(v) == g.neighbors(u); });
        if (!ok) return false;
    }
    return true;
}

bool is_empty_plus_star(const Graph& g) {
    const auto comps = components(to_sparse(g));
    int nontrivial = 0;
    for (const auto& comp : comps) {
        if (comp.size() == 1) continue;
        if (++nontrivial > 1) return false;
        int centres = 0;
        int leaves = 0;
        for (int v : comp) {
            if (g.degree(v) == static_cast<int>(comp.size()) - 1) ++centres;
            if (g.degree(v) == 1) ++leaves;
        }
        const bool star = comp.size() == 2 || (centres == 1 && leaves + 1 == static_cast<int>(comp.size()));
        if (!star) return false;
    }
    return true;
}

// ---- spec parsing --------------------------------------------------------

std::vector<ThresholdStep> parse_threshold_sequence(std::string_view text) {
    std::vector<ThresholdStep> seq;
    for (char c : text) {
        switch (std::tolower(static_cast<unsigned char>(c))) {
            case 'i':
                seq.push_back(ThresholdStep::Isolated);
                break;
            case 'u':
                seq.push_back(ThresholdStep::Universal);
                break;
            default:
                throw InvalidSpec(std::string("threshold steps are 'i' or 'u', got '") + c + "'");
        }
    }
    require(!seq.empty(), "threshold sequence must be nonempty");
    return seq;
}

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

long long parse_int(const std::string& s) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    require(ec == std::errc{} && ptr == s.data() + s.size() && !s.empty(), "expected an integer, got '" + s + "'");
    return v;
}

int parse_count(const std::string& s) {
    const long long v = parse_int(s);
    require(v >= 0 && v <= 4096, "count out of range: '" + s + "'");
    return static_cast<int>(v);
}

std::uint64_t parse_seed(const std::string& s) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    require(ec == std::errc{} && ptr == s.data() + s.size() && !s.empty(), "bad seed '" + s + "'");
    return v;
}

double parse_prob(const std::string& s) {
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    require(used == s.size() && !s.empty(), "bad probability '" + s + "'");
    require(v >= 0.0 && v <= 1.0, "probability must lie in [0,1]");
    return v;
}

std::vector<int> parse_list(const std::string& s) {
    std::vector<int> out;
    for (const auto& part : split(s, ',')) out.push_back(parse_count(part));
    return out;
}

struct Fields {
    std::vector<std::string> positional;
    std::map<std::string, std::string> keyed;

    const std::string& at(std::size_t i, const std::string& what) const {
        require(i < positional.size(), "missing " + what);
        return positional[i];
    }
    std::optional<std::string> key(const std::string& k) const {
        auto it = keyed.find(k);
        if (it == keyed.end()) return std::nullopt;
        return it->second;
    }
};

Fields fields_of(const std::vector<std::string>& parts) {
    Fields f;
    for (std::size_t i = 1; i < parts.size(); ++i) {
        const auto eq = parts[i].find('=');
        if (eq == std::string::npos) {
            f.positional.push_back(parts[i]);
        } else {
            f.keyed[parts[i].substr(0, eq)] = parts[i].substr(eq + 1);
        }
    }
    return f;
}

std::string lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

std::uint64_t required_seed(const Fields& f) {
    auto seed = f.key("seed");
    require(seed.has_value(), "random families need seed=<u64>");
    return parse_seed(*seed);
}

}  // namespace

FamilySpec parse_family(std::string_view raw) {
    std::string text(raw);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.erase(text.begin());
    require(!text.empty(), "empty family spec");

    const auto colon = text.find(':');
    const std::string head = lower(text.substr(0, colon));
    const std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);

    if (head == "g6") return family::Explicit{graph_from_graph6(rest)};
    if (head == "complement") return family::Explicit{complement(generate(parse_family(rest)))};
    if (head == "union" || head == "join" || head == "product" || head == "matching") {
        const auto operands = split(rest, '/');
        require(operands.size() == 2 || (head == "matching" && operands.size() == 3),
                head + " takes two operands separated by '/'");
        const Graph g = generate(parse_family(operands[0]));
        const Graph h = generate(parse_family(operands[1]));
        if (head == "union") return family::Explicit{disjoint_union(g, h)};
        if (head == "join") return family::Explicit{join(g, h)};
        if (head == "product") return family::Explicit{cartesian_product(g, h)};
        std::vector<int> sigma;
        if (operands.size() == 3) sigma = parse_list(operands[2]);
        return family::MatchingJoin{g, h, sigma};
    }

    const Fields f = fields_of(split(text, ':'));
    if (head == "complete" || head == "k") return family::Complete{parse_count(f.at(0, "order"))};
    if (head == "empty" || head == "kbar") return family::Empty{parse_count(f.at(0, "order"))};
    if (head == "path") return family::Path{parse_count(f.at(0, "order"))};
    if (head == "cycle") return family::Cycle{parse_count(f.at(0, "order"))};
    if (head == "star") return family::Star{parse_count(f.at(0, "leaf count"))};
    if (head == "kmn" || head == "bipartite") {
        const auto mn = parse_list(f.at(0, "part sizes"));
        require(mn.size() == 2, "kmn takes two part sizes");
        require(mn[0] >= 1 && mn[1] >= 1, "kmn part sizes must be positive");
        return family::CompleteBipartite{mn[0], mn[1]};
    }
    if (head == "multipartite") return family::CompleteMultipartite{parse_list(f.at(0, "part sizes"))};
    if (head == "rook") return family::Rook{parse_count(f.at(0, "board size"))};
    if (head == "foldedrook") return family::FoldedRook{parse_count(f.at(0, "board size"))};
    if (head == "afr") return family::Afr{parse_list(f.at(0, "part sizes"))};
    if (head == "threshold") return family::Threshold{parse_threshold_sequence(f.at(0, "creation sequence"))};
    if (head == "petersen") return family::Petersen{};
    if (head == "tree") return family::RandomTree{parse_count(f.at(0, "order")), required_seed(f)};
    if (head == "gnp") {
        return family::RandomGnp{parse_count(f.at(0, "order")), parse_prob(f.key("p").value_or("0.5")),
                                 required_seed(f)};
    }
    if (head == "split") {
        const int n = parse_count(f.at(0, "order"));
        const auto clique = f.key("clique");
        return family::RandomSplit{n, clique ? parse_count(*clique) : n / 2, parse_prob(f.key("p").value_or("0.5")),
                                   required_seed(f)};
    }
    throw InvalidSpec("unknown family '" + head + "'");
}

}  // namespace domrecon
