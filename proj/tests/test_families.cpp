#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "domrecon/canonical.hpp"
#include "domrecon/errors.hpp"
#include "domrecon/families.hpp"
#include "domrecon/graph_io.hpp"
#include "oracles.hpp"

using namespace domrecon;

TEST_CASE("named families have the right shape") {
    CHECK(generate(family::Complete{5}).size() == 10);
    CHECK(generate(family::Empty{5}).size() == 0);
    CHECK(generate(family::Path{5}).size() == 4);
    CHECK(generate(family::Cycle{6}).size() == 6);
    CHECK_THROWS_AS(generate(family::Cycle{2}), InvalidSpec);
    const Graph star = generate(family::Star{4});
    CHECK(star.order() == 5);
    CHECK(star.degree(0) == 4);
    CHECK(generate(family::CompleteBipartite{2, 3}).size() == 6);
    CHECK(generate(family::CompleteMultipartite{{1, 2, 3}}).size() == 2 + 3 + 6);

    const Graph rook = generate(family::Rook{3});
    CHECK(rook.order() == 9);
    for (int v = 0; v < 9; ++v) CHECK(rook.degree(v) == 4);
    CHECK(rook.labels()[5] == "(2,3)");

    const Graph pet = generate(family::Petersen{});
    CHECK(pet.order() == 10);
    CHECK(pet.size() == 15);
}

TEST_CASE("folded rook graph on three") {
    const Graph f = folded_rook(3);
    CHECK(f.order() == 6);
    CHECK(f.size() == 9);
    // (i,j) ~ (k,l) iff the pairs share a coordinate.
    for (int u = 0; u < f.order(); ++u) {
        for (int v = u + 1; v < f.order(); ++v) {
            const auto& a = f.labels()[u];
            const auto& b = f.labels()[v];
            const bool share = a[1] == b[1] || a[1] == b[3] || a[3] == b[1] || a[3] == b[3];
            CHECK(f.adjacent(u, v) == share);
        }
    }
}

TEST_CASE("AFR(1,1,2)") {
    const Graph g = afr({1, 1, 2});
    CHECK(g.order() == 8);
    // The lone vertex of the third part sees the pairs through vertices 3 and 4.
    std::set<std::string> seen;
    for_each_bit(g.neighbors(2), [&](int v) { seen.insert(g.labels()[v]); });
    CHECK(seen == std::set<std::string>{"(3,1)", "(4,1)", "(3,2)", "(4,2)"});
    CHECK(g.labels()[2] == "3");
}

TEST_CASE("threshold sequences") {
    CHECK(generate(family::Threshold{parse_threshold_sequence("iuu")}) == generate(family::Complete{3}));
    CHECK(generate(family::Threshold{parse_threshold_sequence("iii")}) == generate(family::Empty{3}));
    const Graph g = generate(family::Threshold{parse_threshold_sequence("iiu")});
    CHECK(isomorphic(g, generate(family::Star{2})));
    CHECK_THROWS_AS(parse_threshold_sequence("iux"), InvalidSpec);
}

TEST_CASE("random families are seeded and well formed") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Graph t = generate(family::RandomTree{12, seed});
        CHECK(t.size() == 11);
        CHECK(is_connected(to_sparse(t)));
        CHECK(t == generate(family::RandomTree{12, seed}));

        const Graph s = generate(family::RandomSplit{10, 4, 0.5, seed});
        CHECK(oracle::is_split(oracle::Adj(s)));
        CHECK(is_independent(s, 0b1111110000));

        const Graph r = generate(family::RandomGnp{9, 0.3, seed});
        CHECK(r == generate(family::RandomGnp{9, 0.3, seed}));
    }
    CHECK_FALSE(generate(family::RandomTree{12, 1}) == generate(family::RandomTree{12, 2}));
}

TEST_CASE("random trees are spread over labelled trees") {
    // Pruefer sequences make all 16 labelled trees on 4 vertices equally likely.
    std::map<std::string, int> counts;
    for (std::uint64_t seed = 0; seed < 3200; ++seed) ++counts[to_graph6(generate(family::RandomTree{4, seed}))];
    CHECK(counts.size() == 16);
    for (const auto& [text, c] : counts) {
        CHECK(c > 120);
        CHECK(c < 280);
    }
}

TEST_CASE("family spec parser") {
    CHECK(generate(parse_family("kmn:2,3")) == generate(family::CompleteBipartite{2, 3}));
    CHECK(generate(parse_family("star:3")) == generate(family::Star{3}));
    CHECK(generate(parse_family("k:4")) == generate(family::Complete{4}));
    CHECK(generate(parse_family("kbar:4")) == generate(family::Empty{4}));
    CHECK(generate(parse_family("g6:Bw")) == generate(family::Complete{3}));
    CHECK(generate(parse_family("afr:2,2")) == afr({2, 2}));
    CHECK(generate(parse_family("tree:9:seed=4")) == generate(family::RandomTree{9, 4}));
    CHECK(generate(parse_family("union:k:2/kbar:1")).order() == 3);
    CHECK(generate(parse_family("join:kbar:2/kbar:2")) == generate(family::CompleteBipartite{2, 2}));
    CHECK(generate(parse_family("product:k:3/k:2")).size() == 9);
    CHECK(generate(parse_family("complement:cycle:5")).size() == 5);
    CHECK(generate(parse_family("matching:cycle:3/cycle:3")).size() == 9);
    CHECK(is_random_family(parse_family("gnp:5:p=0.2:seed=1")));
    CHECK_FALSE(is_random_family(parse_family("path:3")));

    CHECK_THROWS_AS(parse_family("tree:9"), InvalidSpec);
    CHECK_THROWS_AS(parse_family("nonsense:3"), InvalidSpec);
    CHECK_THROWS_AS(parse_family("kmn:2"), InvalidSpec);
    CHECK_THROWS_AS(parse_family("path:x"), InvalidSpec);
    CHECK_THROWS_AS(parse_family(""), InvalidSpec);
}

TEST_CASE("matching join") {
    const Graph c3 = generate(family::Cycle{3});
    const Graph g = matching_join(c3, c3, {1, 2, 0});
    CHECK(g.order() == 6);
    CHECK(g.adjacent(0, 4));
    CHECK(g.adjacent(1, 5));
    CHECK(g.adjacent(2, 3));
    CHECK_FALSE(g.adjacent(0, 3));
    CHECK_THROWS_AS(matching_join(c3, c3, {0, 0, 1}), InvalidSpec);
    CHECK_THROWS_AS(matching_join(c3, generate(family::Path{2}), {}), InvalidSpec);
}

TEST_CASE("graph counts per order") {
    const std::vector<std::size_t> known = {1, 1, 2, 4, 11, 34, 156, 1044};
    for (int n = 0; n <= 7; ++n) CHECK(graphs_of_order(n).size() == known[n]);
    CHECK(enumerate_graphs_upto(6).size() == 208);
    CHECK_THROWS_AS(graphs_of_order(8), SizeLimit);
}

TEST_CASE("graph enumeration matches the brute-force class count") {
    for (int n = 1; n <= 5; ++n) {
        std::set<std::string> classes;
        const int pairs = n * (n - 1) / 2;
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
            oracle::Adj a(n);
            int k = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++k)
                    if ((code >> k) & 1U) a.a[u][v] = a.a[v][u] = true;
            classes.insert(oracle::brute_canon(a));
        }
        const auto listed = graphs_of_order(n);
        CHECK(listed.size() == classes.size());
        std::set<std::string> from_listed;
        for (const Graph& g : listed) from_listed.insert(oracle::brute_canon(oracle::Adj(g)));
        CHECK(from_listed == classes);
    }
}

TEST_CASE("recognisers agree with forbidden subgraph characterisations") {
    for (const Graph& g : enumerate_graphs_upto(7)) {
        const oracle::Adj a(g);
        const auto thr = threshold_decomposition(g);
        CHECK(thr.has_value() == oracle::is_threshold(a));
        if (thr) {
            const Graph rebuilt = generate(family::Threshold{thr->sequence});
            CHECK(isomorphic(rebuilt, g));
            const auto u = std::count(thr->sequence.begin() + 1, thr->sequence.end(), ThresholdStep::Universal);
            CHECK(u == thr->universal_additions);
        }
        const auto split = split_partition(g);
        CHECK(split.has_value() == oracle::is_split(a));
        if (split) {
            CHECK((split->clique | split->independent) == g.vertices());
            CHECK((split->clique & split->independent) == 0);
            CHECK(is_independent(g, split->independent));
            CHECK(is_independent(complement(g), split->clique));
        }
        CHECK(is_complete_multipartite(g) == oracle::is_complete_multipartite(a));
        CHECK(is_empty_plus_star(g) == oracle::is_empty_plus_star(a));
    }
}

TEST_CASE("split partition takes the largest clique") {
    // K4 with a pendant at one vertex: clique side must be all of K4.
    const Graph g = make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
    const auto p = split_partition(g);
    REQUIRE(p.has_value());
    CHECK(p->clique == 0b01111);
}

TEST_CASE("predicted reconfiguration graphs") {
    CHECK(isomorphic(predicted_rook_reconfig(2), join(empty_sparse(2), empty_sparse(4))));
    const SparseGraph r3 = predicted_rook_reconfig(3);
    CHECK(r3.order() == 48);  // 2 * 27 - 6 permutations
    CHECK(r3.size() == 162);  // two copies of 27 * 6 / 2 edges each; shared vertices share no edges
    CHECK(predicted_rook_reconfig(1).order() == 1);
    CHECK(predicted_rook_reconfig_dense(3).size() == 162);
    CHECK_THROWS_AS(predicted_rook_reconfig_dense(4), SizeLimit);
    CHECK(predicted_rook_reconfig_dense(2).order() == 6);

    const Graph k3 = generate(family::Complete{3});
    const Graph c4 = generate(family::Cycle{4});
    const auto rc4 = build_reconfig_graph(c4);
    CHECK_THROWS_AS(predicted_join_reconfig(k3, c4, build_reconfig_graph(k3), rc4), UniversalVertexPresent);
    const SparseGraph pj = predicted_join_reconfig(c4, c4, rc4, rc4);
    CHECK(pj.order() == 2 * rc4.order() + 16);
}
