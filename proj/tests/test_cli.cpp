#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "domrecon/canonical.hpp"
#include "domrecon/graph_io.hpp"

using domrecon::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("mds prints the documented JSON") {
    const auto r = call({"mds", "--graph", "star:3"});
    CHECK(r.code == 0);
    CHECK(r.out == "[[0],[1,2,3]]\n");
    CHECK(r.err.empty());
    CHECK(call({"mds", "--graph", "star:3", "--minimum"}).out == "[[0]]\n");
}

TEST_CASE("recon writes DOT, graph6 and JSON") {
    const auto dot = call({"recon", "--graph", "kmn:2,2", "--format", "dot"});
    CHECK(dot.code == 0);
    CHECK(dot.out.rfind("graph R {", 0) == 0);
    CHECK(dot.out.find("label=\"{0,1}\"") != std::string::npos);

    const auto g6 = call({"recon", "--graph", "kmn:2,2"});
    const auto r = domrecon::sparse_from_graph6(g6.out.substr(0, g6.out.size() - 1));
    CHECK(domrecon::isomorphic(r, domrecon::join(domrecon::empty_sparse(2), domrecon::empty_sparse(4))));

    const auto js = call({"recon", "--graph", "cycle:5", "--format", "json"});
    const auto j = nlohmann::json::parse(js.out);
    CHECK(j["kind"] == "reconfiguration");
    CHECK(j["sets"].size() == 5);
    CHECK(j["diameter"] == 2);

    const auto stats = nlohmann::json::parse(call({"recon", "--graph", "product:k:3/k:2", "--stats"}).out);
    CHECK(stats["order"] == 11);
    CHECK(stats["diameter"].is_null());

    const auto gamma = nlohmann::json::parse(call({"gamma", "--graph", "path:4", "--format", "json"}).out);
    CHECK(gamma["kind"] == "gamma");
}

TEST_CASE("verify exit codes") {
    const auto ok = call({"verify", "rook", "--n", "2"});
    CHECK(ok.code == 0);
    CHECK(nlohmann::json::parse(ok.out)["verdict"] == "verified");

    const auto inap = call({"verify", "join_general", "--graph", "k:3", "--graph2", "kbar:2"});
    CHECK(inap.code == 0);
    CHECK(nlohmann::json::parse(inap.out)["verdict"] == "inapplicable");

    CHECK(call({"verify", "kmn", "--m", "2", "--n", "3"}).code == 0);
    CHECK(call({"verify", "kmn", "--m", "2"}).code == 2);
    CHECK(call({"verify", "made_up"}).code == 2);
    CHECK(call({"verify", "maxdegree", "--graph", "path:30"}).code == 3);
}

TEST_CASE("verify replays a report's params") {
    const auto first = call({"verify", "subgraph_lemma", "--graph", "cycle:6", "--set", "0,3"});
    REQUIRE(first.code == 0);
    const auto params = nlohmann::json::parse(first.out)["params"].dump();
    const auto again = call({"verify", "subgraph_lemma", "--params", params});
    CHECK(again.out == first.out);
    CHECK(call({"verify", "kmn", "--params", "{not json"}).code == 2);
}

TEST_CASE("usage and size errors") {
    CHECK(call({}).code == 2);
    CHECK(call({"bogus"}).code == 2);
    CHECK(call({"mds"}).code == 2);
    const auto bad = call({"mds", "--graph", "nosuch:3"});
    CHECK(bad.code == 2);
    CHECK(bad.out.empty());
    CHECK(bad.err.find("unknown family") != std::string::npos);
    CHECK(call({"mds", "--graph", "star:3", "--limit-mds", "1"}).code == 3);
    CHECK(call({"mds", "--graph", "k:30"}).code == 3);
    CHECK(call({"gen", "tree:5"}).code == 2);
    CHECK(call({"gen", "tree:5", "--seed", "4"}).code == 0);
    CHECK(call({"--help"}).code == 0);
}

TEST_CASE("gen formats") {
    CHECK(call({"gen", "k:3"}).out == "Bw\n");
    CHECK(call({"gen", "path:3", "--format", "edges"}).out == "3\n0 1\n1 2\n");
    const auto j = nlohmann::json::parse(call({"gen", "kmn:1,2", "--format", "json"}).out);
    CHECK(j["size"] == 2);
    CHECK(call({"gen", "rook:2", "--format", "dot"}).out.find("(1,2)") != std::string::npos);
}

TEST_CASE("graphs lists isomorphism classes") {
    const auto r = call({"graphs", "4"});
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 11);
    const auto upto = call({"graphs", "4", "--upto"});
    CHECK(std::count(upto.out.begin(), upto.out.end(), '\n') == 18);
    CHECK(call({"graphs", "9"}).code == 2);
}

TEST_CASE("scan output is byte-stable across job counts") {
    const auto one = call({"scan", "all:5", "--jobs", "1"});
    const auto four = call({"scan", "all:5", "--jobs", "4"});
    CHECK(one.code == 0);
    CHECK(one.out == four.out);
    CHECK(one.out == call({"scan", "all:5"}).out);
    const auto j = nlohmann::json::parse(one.out);
    CHECK(j.size() == 5);
    CHECK(j[0]["stats"]["examined"] == 52);

    const auto trees = call({"scan", "random:tree:9:count=5", "--check", "tree_conjecture", "--seed", "3"});
    CHECK(trees.code == 0);
    CHECK(call({"scan", "random:tree:9:count=5", "--check", "tree_conjecture"}).code == 2);
    CHECK(call({"scan", "all:4", "--check", "nope"}).code == 2);
}

TEST_CASE("graph sources from files") {
    const std::string g6_path = "cli_test_graph.g6";
    const std::string el_path = "cli_test_graph.txt";
    const std::string corpus_path = "cli_test_corpus.g6";
    {
        std::ofstream(g6_path) << "Bw\n";
        std::ofstream(el_path) << "3\n0 1\n";
        std::ofstream(corpus_path) << "Bw\nbroken record\nDhc\n";
    }
    CHECK(call({"mds", "--graph", g6_path}).out == "[[0],[1],[2]]\n");
    CHECK(call({"mds", "--graph", el_path}).out == "[[0,2],[1,2]]\n");
    const auto scan = call({"scan", corpus_path, "--check", "empty_iff"});
    CHECK(scan.code == 0);
    CHECK(scan.err.find("warning") != std::string::npos);
    CHECK(nlohmann::json::parse(scan.out)[0]["stats"]["skipped"] == 1);
    std::remove(g6_path.c_str());
    std::remove(el_path.c_str());
    std::remove(corpus_path.c_str());
}
