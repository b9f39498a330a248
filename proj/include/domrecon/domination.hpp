#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "domrecon/graph.hpp"

namespace domrecon {

// ---- mask kernels --------------------------------------------------------

// Vertices dominated at least once / at least twice by s.
struct Coverage {
    Mask once = 0;
    Mask twice = 0;
};

inline Coverage coverage(const Graph& g, Mask s) {
    Coverage c;
    for_each_bit(s, [&](int v) {
        const Mask nv = g.closed_neighbors(v);
        c.twice |= c.once & nv;
        c.once |= nv;
    });
    return c;
}

// Vertices of N[v] left undominated by s - v, assuming v in s.
inline Mask private_neighbors(const Graph& g, const Coverage& c, int v) {
    return g.closed_neighbors(v) & c.once & ~c.twice;
}

inline bool dominates(const Graph& g, Mask s) { return coverage(g, s).once == g.vertices(); }

inline bool minimal_dominates(const Graph& g, Mask s) {
    const Coverage c = coverage(g, s);
    if (c.once != g.vertices()) return false;
    bool all_critical = true;
    for_each_bit(s, [&](int v) { all_critical = all_critical && private_neighbors(g, c, v) != 0; });
    return all_critical;
}

// Mask form of the vertex taxonomy for a dominating set s. Only meaningful
// when s dominates g.
struct VertexClasses {
    Coverage cover;
    Mask critical = 0;
    Mask a1 = 0;
    Mask a2 = 0;
    Mask n1 = 0;
    Mask n2 = 0;
};

inline VertexClasses vertex_classes(const Graph& g, Mask s) {
    VertexClasses k;
    k.cover = coverage(g, s);
    const Mask outside = g.vertices() & ~s;
    k.n1 = outside & ~k.cover.twice;
    k.n2 = outside & k.cover.twice;
    for_each_bit(s, [&](int v) {
        if (private_neighbors(g, k.cover, v) == 0) return;
        k.critical |= bit(v);
        if ((g.closed_neighbors(v) & k.n1) != 0) k.a1 |= bit(v);
    });
    k.a2 = k.critical & ~k.a1;
    return k;
}

// ---- public surface ------------------------------------------------------

bool is_dominating(const Graph& g, const VertexSet& s);
bool is_minimal_dominating(const Graph& g, const VertexSet& s);

/// Partition of V induced by a dominating set S.
///
/// critical = a(S) splits into a1 (some private neighbour outside S, i.e. a
/// neighbour in N1) and a2 (sole private neighbour is the vertex itself).
/// V - S splits into n1 (exactly one dominator) and n2 (two or more).
struct DominationProfile {
    VertexSet set;
    VertexSet critical;
    VertexSet a1;
    VertexSet a2;
    VertexSet supported;
    VertexSet n1;
    VertexSet n2;
    // (v, privates(v)) for every v in critical, ascending v.
    std::vector<std::pair<int, VertexSet>> privates;

    VertexSet privates_of(int v) const;
};

// Throws NotDominating.
DominationProfile classify_vertices(const Graph& g, const VertexSet& s);

/// All minimal dominating sets of a graph in ascending bit-mask order.
class MdsCollection {
public:
    MdsCollection() = default;
    MdsCollection(int host_order, std::vector<Mask> sorted_masks);

    int host_order() const { return n_; }
    std::size_t size() const { return sets_.size(); }
    bool empty() const { return sets_.empty(); }
    VertexSet operator[](std::size_t i) const { return {sets_[i], n_}; }
    Mask mask(std::size_t i) const { return sets_[i]; }
    const std::vector<Mask>& masks() const { return sets_; }
    std::optional<std::size_t> find(Mask m) const;
    std::optional<std::size_t> find(const VertexSet& s) const { return find(s.bits()); }

    friend bool operator==(const MdsCollection& a, const MdsCollection& b) {
        return a.n_ == b.n_ && a.sets_ == b.sets_;
    }

private:
    int n_ = 0;
    std::vector<Mask> sets_;
};

inline constexpr std::size_t kDefaultMdsLimit = 200000;
inline constexpr int kDefaultEnumerationOrder = 24;

// kDefaultMdsLimit unless DOMRECON_MDS_LIMIT holds a positive integer.
std::size_t default_mds_limit();

struct EnumerationOptions {
    std::size_t max_sets = default_mds_limit();
    int max_order = kDefaultEnumerationOrder;
    int threads = 1;  // >1 selects the OpenMP kernel
};

// Dispatches to the serial or parallel pruned kernel.
MdsCollection enumerate_mds(const Graph& g, const EnumerationOptions& opts = {});

// Branch-and-prune search over include/exclude decisions in vertex order.
// A branch stops at its first dominating set, and dies once some chosen
// vertex has lost all private neighbours or some vertex can no longer be
// dominated.
MdsCollection enumerate_mds_serial(const Graph& g, const EnumerationOptions& opts = {});
// Same search, with the top of the tree expanded into independent tasks.
MdsCollection enumerate_mds_parallel(const Graph& g, const EnumerationOptions& opts = {});
// Reference definition: every one of the 2^n subsets filtered by
// minimal_dominates. Always serial.
MdsCollection enumerate_mds_exhaustive(const Graph& g, const EnumerationOptions& opts = {});

int domination_number(const Graph& g, const EnumerationOptions& opts = {});
MdsCollection minimum_mds(const Graph& g, const EnumerationOptions& opts = {});
MdsCollection minimum_of(const MdsCollection& all);

}  // namespace domrecon
