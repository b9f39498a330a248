#include <doctest.h>

#include <random>

#include "domrecon/errors.hpp"
#include "domrecon/families.hpp"
#include "domrecon/graph.hpp"
#include "domrecon/graph_io.hpp"
#include "oracles.hpp"

using namespace domrecon;

TEST_CASE("make_graph validates input") {
    const Graph g = make_graph(3, {{0, 1}, {1, 2}, {1, 0}});
    CHECK(g.order() == 3);
    CHECK(g.size() == 2);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 0));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK(g.neighbors(1) == 0b101);
    CHECK(g.closed_neighbors(1) == 0b111);

    CHECK_THROWS_AS(make_graph(3, {{1, 1}}), InvalidGraph);
    CHECK_THROWS_AS(make_graph(3, {{0, 3}}), InvalidGraph);
    CHECK_THROWS_AS(make_graph(65, {}), SizeLimit);
    CHECK_NOTHROW(make_graph(64, {{0, 63}}));
    CHECK_THROWS_AS(graph_from_masks({0b10, 0b00}), InvalidGraph);
}

TEST_CASE("vertex sets print and compare") {
    const auto s = VertexSet::of({0, 2, 5}, 6);
    CHECK(s.to_string() == "{0,2,5}");
    CHECK(s.size() == 3);
    CHECK(s.contains(2));
    CHECK_FALSE(s.contains(1));
    CHECK(VertexSet::of({0, 2}, 6).subset_of(s));
    CHECK((s - VertexSet::of({2}, 6)) == VertexSet::of({0, 5}, 6));
    CHECK(VertexSet(0, 4).to_string() == "{}");
}

TEST_CASE("graph6 matches reference encodings") {
    CHECK(to_graph6(generate(family::Complete{3})) == "Bw");
    CHECK(to_graph6(generate(family::Complete{2})) == "A_");
    CHECK(to_graph6(generate(family::Path{4})) == "Ch");
    CHECK(to_graph6(generate(family::Cycle{5})) == "Dhc");
    CHECK(to_graph6(generate(family::Complete{1})) == "@");
    CHECK(to_graph6(generate(family::Empty{3})) == "B?");
    CHECK(to_graph6(make_graph(0, {})) == "?");
    CHECK(to_graph6(generate(family::Complete{63})).substr(0, 4) == "~??~");

    CHECK(graph_from_graph6("IheA@GUAo").size() == 15);
    CHECK(graph_from_graph6(">>graph6<<Bw") == generate(family::Complete{3}));
    CHECK_THROWS_AS(graph_from_graph6("B"), InvalidGraph);
    CHECK_THROWS_AS(graph_from_graph6("Bw!"), InvalidGraph);
    CHECK_THROWS_AS(graph_from_graph6(""), InvalidGraph);
}

TEST_CASE("graph6 round trips") {
    std::mt19937_64 rng(11);
    for (int n = 0; n <= 64; n += 3) {
        const Graph g = oracle::random_graph(rng, n, 0.3);
        CHECK(graph_from_graph6(to_graph6(g)) == g);
        const SparseGraph s = to_sparse(g);
        CHECK(to_graph6(s) == to_graph6(g));
        CHECK(sparse_from_graph6(to_graph6(g)) == s);
    }
    const SparseGraph big = cartesian_product(complete_sparse(9), complete_sparse(9));
    CHECK(sparse_from_graph6(to_graph6(big)) == big);
    CHECK_THROWS_AS(graph_from_graph6(to_graph6(big)), SizeLimit);
}

TEST_CASE("edge lists and DOT") {
    const Graph g = generate(family::Path{3});
    CHECK(to_edge_list(g) == "3\n0 1\n1 2\n");
    CHECK(graph_from_edge_list("# path\n3\n0 1\n\n1 2\n") == g);
    CHECK_THROWS_AS(graph_from_edge_list("3\n0 5\n"), InvalidGraph);
    CHECK_THROWS_AS(graph_from_edge_list("x\n"), InvalidGraph);

    const std::string dot = to_dot(g);
    CHECK(dot.find("graph G {") == 0);
    CHECK(dot.find("0 -- 1;") != std::string::npos);
    CHECK(dot.find("1 -- 2;") != std::string::npos);
    const std::string labelled = to_dot(generate(family::Rook{2}));
    CHECK(labelled.find("label=\"(1,1)\"") != std::string::npos);
}

TEST_CASE("constructions") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = oracle::random_graph(rng, 1 + trial % 7, 0.5);
        const Graph h = oracle::random_graph(rng, 1 + trial % 5, 0.4);

        CHECK(complement(complement(g)) == g);
        const auto n = static_cast<std::size_t>(g.order());
        CHECK(g.size() + complement(g).size() == n * (n - 1) / 2);

        const Graph u = disjoint_union(g, h);
        CHECK(u.order() == g.order() + h.order());
        CHECK(u.size() == g.size() + h.size());

        const Graph j = join(g, h);
        CHECK(j.size() == g.size() + h.size() + n * static_cast<std::size_t>(h.order()));

        const Graph p = cartesian_product(g, h);
        for (int a = 0; a < g.order(); ++a) {
            for (int b = 0; b < h.order(); ++b) CHECK(p.degree(a * h.order() + b) == g.degree(a) + h.degree(b));
        }
        CHECK(to_sparse(p) == cartesian_product(to_sparse(g), to_sparse(h)));
        CHECK(to_sparse(j) == join(to_sparse(g), to_sparse(h)));
        CHECK(to_sparse(u) == disjoint_union(to_sparse(g), to_sparse(h)));
    }
}

TEST_CASE("induced subgraphs and closed neighbourhood deletion") {
    const Graph g = generate(family::Path{5});
    const Reduced r = delete_closed_neighborhood(g, VertexSet::of({1}, 5));
    CHECK(r.graph.order() == 2);
    CHECK(r.graph.size() == 1);
    CHECK(r.new_to_old == std::vector<int>{3, 4});
    CHECK(r.old_to_new == std::vector<int>{-1, -1, -1, 0, 1});

    const Reduced all = delete_closed_neighborhood(g, VertexSet::of({1, 3}, 5));
    CHECK(all.graph.order() == 0);

    const Reduced ind = induced_subgraph(g, 0b10101);
    CHECK(ind.graph.order() == 3);
    CHECK(ind.graph.size() == 0);
    CHECK(closed_neighborhood(g, VertexSet::of({0}, 5)) == VertexSet::of({0, 1}, 5));
}

TEST_CASE("metrics agree with BFS oracle") {
    const Metrics c5 = metrics(generate(family::Cycle{5}));
    CHECK(c5.diameter == 2);
    CHECK(c5.girth == 5);
    CHECK(c5.components.size() == 1);
    CHECK_FALSE(metrics(generate(family::Path{6})).girth.has_value());
    CHECK_FALSE(metrics(generate(family::Empty{2})).diameter.has_value());
    CHECK(metrics(generate(family::Petersen{})).girth == 5);

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = oracle::random_graph(rng, 1 + trial % 12, trial % 3 == 0 ? 0.15 : 0.35);
        const oracle::Adj a(g);
        const SparseGraph s = to_sparse(g);
        CHECK(static_cast<int>(components(s).size()) == oracle::component_count(a));
        CHECK(diameter(s).value_or(-1) == oracle::diameter(a));
        CHECK(girth(s).value_or(-1) == oracle::girth(a));
        CHECK(is_tree(s) == (oracle::component_count(a) == 1 && g.size() + 1 == static_cast<std::size_t>(g.order())));
    }
}

TEST_CASE("vertex predicates") {
    const Graph star = generate(family::Star{3});
    CHECK(universal_vertices(star) == 0b1);
    CHECK(isolated_vertices(disjoint_union(star, generate(family::Empty{2}))) == 0b110000);
    CHECK(is_independent(star, 0b1110));
    CHECK_FALSE(is_independent(star, 0b11));
    CHECK(is_complete(complete_sparse(4)));
    CHECK(is_complete(complete_sparse(1)));
    CHECK(is_edgeless(empty_sparse(3)));
}
