#include "domrecon/domination.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "domrecon/errors.hpp"

namespace domrecon {

bool is_dominating(const Graph& g, const VertexSet& s) { return dominates(g, s.bits()); }

bool is_minimal_dominating(const Graph& g, const VertexSet& s) { return minimal_dominates(g, s.bits()); }

VertexSet DominationProfile::privates_of(int v) const {
    for (const auto& [u, p] : privates) {
        if (u == v) return p;
    }
    return {0, set.host_size()};
}

DominationProfile classify_vertices(const Graph& g, const VertexSet& s) {
    const int n = g.order();
    const Coverage c = coverage(g, s.bits());
    if (c.once != g.vertices()) throw NotDominating("set " + s.to_string() + " does not dominate the graph");

    const VertexClasses k = vertex_classes(g, s.bits());
    DominationProfile p;
    for_each_bit(k.critical, [&](int v) { p.privates.emplace_back(v, VertexSet(private_neighbors(g, c, v), n)); });
    p.set = s;
    p.critical = {k.critical, n};
    p.a1 = {k.a1, n};
    p.a2 = {k.a2, n};
    p.supported = {s.bits() & ~k.critical, n};
    p.n1 = {k.n1, n};
    p.n2 = {k.n2, n};
    return p;
}

MdsCollection::MdsCollection(int host_order, std::vector<Mask> sorted_masks)
    : n_(host_order), sets_(std::move(sorted_masks)) {}

std::optional<std::size_t> MdsCollection::find(Mask m) const {
    auto it = std::lower_bound(sets_.begin(), sets_.end(), m);
    if (it == sets_.end() || *it != m) return std::nullopt;
    return static_cast<std::size_t>(it - sets_.begin());
}

std::size_t default_mds_limit() {
    if (const char* env = std::getenv("DOMRECON_MDS_LIMIT")) {
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), value);
        if (ec == std::errc{} && *ptr == '\0' && value > 0) return value;
    }
    return kDefaultMdsLimit;
}

namespace {

void check_order(const Graph& g, const EnumerationOptions& opts) {
    if (g.order() > opts.max_order) {
        throw SizeLimit("enumeration bound is " + std::to_string(opts.max_order) + " vertices, graph has " +
                        std::to_string(g.order()));
    }
}

[[noreturn]] void too_many(std::size_t limit) {
    throw SizeLimit("more than " + std::to_string(limit) + " minimal dominating sets (raise --limit-mds)");
}

struct Node {
    int next = 0;  // first undecided vertex
    Mask chosen = 0;
    Coverage cover;
};

class PrunedSearch {
public:
    explicit PrunedSearch(const Graph& g) : g_(g), n_(g.order()), dead_(n_ + 1, 0) {
        // dead_[v]: vertices whose whole closed neighbourhood lies below v.
        for (int w = 0; w < n_; ++w) {
            const int top = 63 - std::countl_zero(g.closed_neighbors(w));
            for (int v = top + 1; v <= n_; ++v) dead_[v] |= bit(w);
        }
    }

    enum class Step { Record, Prune, Branch };

    Step classify(const Node& node) const {
        if (node.cover.once == g_.vertices()) return Step::Record;
        if ((dead_[node.next] & ~node.cover.once) != 0) return Step::Prune;
        return Step::Branch;
    }

    // Child with node.next included, or nullopt when that child is hopeless.
    std::optional<Node> include(const Node& node) const {
        const int v = node.next;
        const Mask nv = g_.closed_neighbors(v);
        if ((nv & ~node.cover.once) == 0) return std::nullopt;  // v would have no private neighbour
        Node child = node;
        child.next = v + 1;
        child.chosen |= bit(v);
        child.cover.twice |= child.cover.once & nv;
        child.cover.once |= nv;
        bool alive = true;
        for_each_bit(node.chosen, [&](int u) { alive = alive && private_neighbors(g_, child.cover, u) != 0; });
        if (!alive) return std::nullopt;
        return child;
    }

    Node exclude(const Node& node) const {
        Node child = node;
        child.next = node.next + 1;
        return child;
    }

    void run(const Node& node, std::vector<Mask>& out, std::size_t limit) const {
        switch (classify(node)) {
            case Step::Record:
                // Every chosen vertex kept a private neighbour on the way
                // down, so a dominating leaf is already minimal.
                out.push_back(node.chosen);
                if (out.size() > limit) too_many(limit);
                return;
            case Step::Prune:
                return;
            case Step::Branch:
                break;
        }
        if (auto child = include(node)) run(*child, out, limit);
        run(exclude(node), out, limit);
    }

    int order() const { return n_; }

private:
    const Graph& g_;
    int n_;
    std::vector<Mask> dead_;
};

MdsCollection finish(const Graph& g, std::vector<Mask> found) {
    std::sort(found.begin(), found.end());
    return {g.order(), std::move(found)};
}

}  // namespace

MdsCollection enumerate_mds_serial(const Graph& g, const EnumerationOptions& opts) {
    check_order(g, opts);
    PrunedSearch search(g);
    std::vector<Mask> found;
    search.run(Node{}, found, opts.max_sets);
    return finish(g, std::move(found));
}

MdsCollection enumerate_mds_parallel(const Graph& g, const EnumerationOptions& opts) {
    check_order(g, opts);
    PrunedSearch search(g);

    // Expand the top levels breadth-first into independent subtrees.
    std::vector<Mask> found;
    std::vector<Node> frontier{Node{}};
    const int threads = std::max(1, opts.threads);
    const std::size_t target = static_cast<std::size_t>(threads) * 32;
    while (!frontier.empty() && frontier.size() < target) {
        std::vector<Node> next;
        bool expanded = false;
        for (const Node& node : frontier) {
            switch (search.classify(node)) {
                case PrunedSearch::Step::Record:
                    found.push_back(node.chosen);
                    break;
                case PrunedSearch::Step::Prune:
                    break;
                case PrunedSearch::Step::Branch:
                    if (auto child = search.include(node)) next.push_back(*child);
                    next.push_back(search.exclude(node));
                    expanded = true;
                    break;
            }
        }
        frontier = std::move(next);
        if (!expanded) break;
    }
    if (found.size() > opts.max_sets) too_many(opts.max_sets);

    const auto tasks = static_cast<long long>(frontier.size());
    std::vector<std::vector<Mask>> partial(frontier.size());
    std::atomic<std::size_t> total{found.size()};
    std::atomic<bool> overflow{false};

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (long long t = 0; t < tasks; ++t) {
        if (overflow.load(std::memory_order_relaxed)) continue;
        try {
            search.run(frontier[t], partial[t], opts.max_sets);
            if (total.fetch_add(partial[t].size()) + partial[t].size() > opts.max_sets) overflow = true;
        } catch (const SizeLimit&) {
            overflow = true;
        }
    }
    if (overflow) too_many(opts.max_sets);

    for (auto& part : partial) found.insert(found.end(), part.begin(), part.end());
    return finish(g, std::move(found));
}

MdsCollection enumerate_mds_exhaustive(const Graph& g, const EnumerationOptions& opts) {
    check_order(g, opts);
    std::vector<Mask> found;
    const Mask end = Mask{1} << g.order();
    for (Mask s = 0; s < end; ++s) {
        if (minimal_dominates(g, s)) {
            found.push_back(s);
            if (found.size() > opts.max_sets) too_many(opts.max_sets);
        }
    }
    return {g.order(), std::move(found)};
}

MdsCollection enumerate_mds(const Graph& g, const EnumerationOptions& opts) {
    return opts.threads > 1 ? enumerate_mds_parallel(g, opts) : enumerate_mds_serial(g, opts);
}

MdsCollection minimum_of(const MdsCollection& all) {
    int best = kMaxVertices + 1;
    for (Mask m : all.masks()) best = std::min(best, popcount(m));
    std::vector<Mask> keep;
    for (Mask m : all.masks()) {
        if (popcount(m) == best) keep.push_back(m);
    }
    return {all.host_order(), std::move(keep)};
}

int domination_number(const Graph& g, const EnumerationOptions& opts) {
    const MdsCollection all = enumerate_mds(g, opts);
    int best = kMaxVertices + 1;
    for (Mask m : all.masks()) best = std::min(best, popcount(m));
    return best;
}

MdsCollection minimum_mds(const Graph& g, const EnumerationOptions& opts) { return minimum_of(enumerate_mds(g, opts)); }

}  // namespace domrecon
