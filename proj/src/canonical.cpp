#include "domrecon/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "domrecon/errors.hpp"
#include "domrecon/graph_io.hpp"

namespace domrecon {

void refine_partition(const SparseGraph& g, std::vector<int>& colour) {
    const int n = g.order();
    std::vector<int> order(n);
    std::vector<std::vector<int>> signature(n);
    auto count_cells = [&] {
        std::vector<char> start(n, 0);
        for (int c : colour) start[c] = 1;
        return std::count(start.begin(), start.end(), 1);
    };
    auto cells = count_cells();
    while (cells < n) {
        for (int v = 0; v < n; ++v) {
            auto& sig = signature[v];
            sig.clear();
            sig.push_back(colour[v]);
            for (int w : g.neighbors(v)) sig.push_back(colour[w]);
            std::sort(sig.begin() + 1, sig.end());
        }
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return signature[a] < signature[b]; });
        std::vector<int> next(n);
        for (int k = 0; k < n; ++k) {
            const int v = order[k];
            next[v] = (k > 0 && signature[order[k - 1]] == signature[v]) ? next[order[k - 1]] : k;
        }
        colour = std::move(next);
        const auto refined = count_cells();
        if (refined == cells) break;
        cells = refined;
    }
}

namespace {

struct Leaf {
    std::vector<std::uint64_t> certificate;
    std::vector<int> position;  // vertex -> canonical index
    std::vector<int> path;
};

std::vector<std::uint64_t> certificate_of(const SparseGraph& g, const std::vector<int>& position) {
    const auto n = static_cast<std::uint64_t>(g.order());
    std::vector<std::uint64_t> cert;
    cert.reserve(g.size());
    for (int u = 0; u < g.order(); ++u) {
        for (int w : g.neighbors(u)) {
            if (u >= w) continue;
            auto a = static_cast<std::uint64_t>(position[u]);
            auto b = static_cast<std::uint64_t>(position[w]);
            if (a > b) std::swap(a, b);
            cert.push_back(a * n + b);
        }
    }
    std::sort(cert.begin(), cert.end());
    return cert;
}

std::size_t common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t k = 0;
    while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
    return k;
}

int find_root(std::vector<int>& parent, int v) {
    while (parent[v] != v) {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    return v;
}

// Individualisation-refinement search keeping the leaf with the smallest
// certificate. Equal certificates expose automorphisms, which prune
// siblings in the same orbit of the path stabiliser and trigger a jump back
// to the node where the two equivalent leaves diverged.
class Canonizer {
public:
    explicit Canonizer(const SparseGraph& g) : g_(g), n_(g.order()) {}

    Leaf run() {
        std::vector<int> colour(n_, 0);
        search(std::move(colour));
        return best_;
    }

private:
    // Returns the level at which the search resumes.
    int search(std::vector<int> colour) {
        const int level = static_cast<int>(path_.size());
        refine_partition(g_, colour);

        // Target cell: the non-singleton cell with the smallest start.
        std::vector<int> size(n_, 0);
        for (int c : colour) ++size[c];
        int target = -1;
        for (int c = 0; c < n_; ++c) {
            if (size[c] > 1) {
                target = c;
                break;
            }
        }
        if (target < 0) return leaf(colour);

        std::vector<int> cell;
        for (int v = 0; v < n_; ++v) {
            if (colour[v] == target) cell.push_back(v);
        }
        std::vector<int> explored;
        for (int w : cell) {
            if (!explored.empty() && same_orbit_as_explored(w, explored)) continue;
            std::vector<int> child = colour;
            for (int x : cell) child[x] = x == w ? target : target + 1;
            path_.push_back(w);
            const int resume = search(std::move(child));
            path_.pop_back();
            explored.push_back(w);
            if (resume < level) return resume;
        }
        return level - 1;
    }

    int leaf(const std::vector<int>& colour) {
        const int level = static_cast<int>(path_.size());
        Leaf current{certificate_of(g_, colour), colour, path_};
        if (!have_first_) {
            have_first_ = true;
            first_ = current;
            best_ = std::move(current);
            return level - 1;
        }
        if (current.certificate == first_.certificate) {
            record_automorphism(first_, current);
            return static_cast<int>(common_prefix(first_.path, current.path));
        }
        if (current.certificate == best_.certificate) {
            record_automorphism(best_, current);
            return static_cast<int>(common_prefix(best_.path, current.path));
        }
        if (current.certificate < best_.certificate) best_ = std::move(current);
        return level - 1;
    }

    void record_automorphism(const Leaf& from, const Leaf& to) {
        std::vector<int> to_vertex(n_);
        for (int v = 0; v < n_; ++v) to_vertex[to.position[v]] = v;
        std::vector<int> gamma(n_);
        for (int v = 0; v < n_; ++v) gamma[v] = to_vertex[from.position[v]];
        generators_.push_back(std::move(gamma));
    }

    bool same_orbit_as_explored(int w, const std::vector<int>& explored) {
        std::vector<int> parent(n_);
        std::iota(parent.begin(), parent.end(), 0);
        bool any = false;
        for (const auto& gamma : generators_) {
            bool fixes_path = true;
            for (int p : path_) fixes_path = fixes_path && gamma[p] == p;
            if (!fixes_path) continue;
            any = true;
            for (int v = 0; v < n_; ++v) {
                int a = find_root(parent, v);
                int b = find_root(parent, gamma[v]);
                if (a != b) parent[a] = b;
            }
        }
        if (!any) return false;
        const int root = find_root(parent, w);
        for (int e : explored) {
            if (find_root(parent, e) == root) return true;
        }
        return false;
    }

    const SparseGraph& g_;
    int n_;
    std::vector<int> path_;
    bool have_first_ = false;
    Leaf first_;
    Leaf best_;
    std::vector<std::vector<int>> generators_;
};

}  // namespace

CanonicalForm canonical_form(const SparseGraph& g, int max_order) {
    if (g.order() > max_order) {
        throw SizeLimit("canonical form bound is " + std::to_string(max_order) + " vertices, graph has " +
                        std::to_string(g.order()));
    }
    CanonicalForm form;
    form.order = g.order();
    if (g.order() == 0) {
        form.text = to_graph6(g);
        return form;
    }
    Leaf best = Canonizer(g).run();
    form.certificate = std::move(best.certificate);
    form.relabeling = std::move(best.position);
    form.text = to_graph6(relabel(g, form.relabeling));
    return form;
}

CanonicalForm canonical_form(const Graph& g) { return canonical_form(to_sparse(g)); }

bool isomorphic(const SparseGraph& g, const SparseGraph& h, int max_order) {
    if (g.order() != h.order() || g.size() != h.size()) return false;
    std::vector<int> dg(g.order()), dh(h.order());
    for (int v = 0; v < g.order(); ++v) {
        dg[v] = g.degree(v);
        dh[v] = h.degree(v);
    }
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return false;
    return canonical_form(g, max_order).certificate == canonical_form(h, max_order).certificate;
}

bool isomorphic(const Graph& g, const Graph& h) { return isomorphic(to_sparse(g), to_sparse(h)); }

SparseGraph relabel(const SparseGraph& g, const std::vector<int>& perm) {
    std::vector<Edge> edges;
    edges.reserve(g.size());
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return SparseGraph(g.order(), edges);
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return make_graph(g.order(), edges);
}

}  // namespace domrecon
