#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "domrecon/canonical.hpp"
#include "domrecon/errors.hpp"
#include "domrecon/families.hpp"
#include "domrecon/graph_io.hpp"
#include "domrecon/reconfig.hpp"
#include "domrecon/report.hpp"
#include "domrecon/scan.hpp"
#include "domrecon/theorems.hpp"

namespace domrecon::cli {
namespace {

bool needs_seed(const std::string& spec) {
    const auto head = spec.substr(0, spec.find(':'));
    return (head == "tree" || head == "gnp" || head == "split") && spec.find("seed=") == std::string::npos;
}

Graph read_graph_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidSpec("cannot open '" + path.string() + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();

    // A single token that is not a bare vertex count is graph6; anything
    // else is read as an edge list.
    std::vector<std::string> records;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        records.push_back(line.substr(start, line.find_last_not_of(" \t\r") - start + 1));
    }
    if (records.size() == 1 && records[0].find_first_of(" \t") == std::string::npos &&
        records[0].find_first_not_of("0123456789") != std::string::npos) {
        return graph_from_graph6(records[0]);
    }
    return graph_from_edge_list(text);
}

// --graph accepts a family spec, g6:<text>, or a path to a graph6 / edge-list file.
Graph resolve_graph(std::string source, std::optional<std::uint64_t> seed) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(source, ec)) return read_graph_file(source);
    if (seed && needs_seed(source)) source += ":seed=" + std::to_string(*seed);
    return generate(parse_family(source));
}

std::vector<int> int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw InvalidSpec("bad integer '" + item + "'");
        } catch (const std::logic_error&) {
            throw InvalidSpec("bad integer '" + item + "'");
        }
    }
    return out;
}

json graph_json(const Graph& g) {
    json j;
    j["graph6"] = to_graph6(g);
    j["order"] = g.order();
    j["size"] = g.size();
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    if (g.has_labels()) j["labels"] = g.labels();
    return j;
}

json metrics_json(const SparseGraph& g) {
    const Metrics m = metrics(g);
    json j;
    j["order"] = g.order();
    j["size"] = g.size();
    j["components"] = m.components.size();
    j["diameter"] = extent_json(m.diameter);
    j["girth"] = extent_json(m.girth);
    j["min_degree"] = m.min_degree;
    j["max_degree"] = m.max_degree;
    return j;
}

struct Options {
    std::string graph;
    std::string format;
    std::optional<std::size_t> limit_mds;
    std::optional<std::uint64_t> seed;
    int jobs = 1;
    bool timing = false;
    bool stats = false;
    bool minimum = false;
    bool upto = false;

    std::string spec;  // gen
    std::string theorem;
    std::string graph2;
    std::optional<int> n;
    std::optional<int> m;
    std::string parts;
    std::string seq;
    std::string set;
    std::optional<int> vertex;
    std::string matching;
    std::string params;
    std::string corpus;
    std::vector<std::string> checks;
    int order = 0;  // graphs
};

EnumerationOptions enumeration(const Options& o) {
    EnumerationOptions e;
    if (o.limit_mds) e.max_sets = *o.limit_mds;
    return e;
}

void emit_graph(std::ostream& out, const Graph& g, const std::string& format) {
    if (format == "dot") {
        out << to_dot(g);
    } else if (format == "json") {
        out << graph_json(g).dump(2) << '\n';
    } else if (format == "edges") {
        out << to_edge_list(g);
    } else {
        out << to_graph6(g) << '\n';
    }
}

int cmd_gen(const Options& o, std::ostream& out) {
    std::string spec = o.spec;
    if (o.seed && needs_seed(spec)) spec += ":seed=" + std::to_string(*o.seed);
    emit_graph(out, generate(parse_family(spec)), o.format);
    return kOk;
}

int cmd_mds(const Options& o, std::ostream& out) {
    const Graph g = resolve_graph(o.graph, o.seed);
    const MdsCollection all = enumerate_mds(g, enumeration(o));
    out << sets_json(o.minimum ? minimum_of(all) : all).dump() << '\n';
    return kOk;
}

int cmd_recon(const Options& o, std::ostream& out, ReconfigKind kind) {
    const Graph g = resolve_graph(o.graph, o.seed);
    ReconfigOptions ro;
    ro.enumeration = enumeration(o);
    const ReconfigGraph r = kind == ReconfigKind::Full ? build_reconfig_graph(g, ro) : build_gamma_graph(g, ro);
    if (o.stats) {
        json j = metrics_json(r.edges);
        j["kind"] = kind == ReconfigKind::Full ? "reconfiguration" : "gamma";
        out << j.dump(2) << '\n';
    } else if (o.format == "dot") {
        out << to_dot(r.edges, DotOptions{kind == ReconfigKind::Full ? "R" : "gamma", true});
    } else if (o.format == "json") {
        out << to_json(r).dump(2) << '\n';
    } else {
        out << to_graph6(r.edges) << '\n';
    }
    return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    TheoremParams p;
    if (!o.params.empty()) {
        try {
            p = params_from_json(json::parse(o.params));
        } catch (const json::exception& e) {
            throw InvalidSpec(std::string("--params is not valid JSON: ") + e.what());
        }
    }
    if (!o.graph.empty()) p.g = resolve_graph(o.graph, o.seed);
    if (!o.graph2.empty()) p.h = resolve_graph(o.graph2, o.seed);
    if (o.n) p.n = o.n;
    if (o.m) p.m = o.m;
    if (!o.parts.empty()) p.parts = int_list(o.parts);
    if (!o.seq.empty()) p.seq = parse_threshold_sequence(o.seq);
    if (!o.set.empty()) {
        Mask s = 0;
        for (int v : int_list(o.set)) {
            if (v < 0 || v >= kMaxVertices) throw InvalidSpec("set member out of range");
            s |= bit(v);
        }
        p.set = s;
    }
    if (o.vertex) p.vertex = o.vertex;
    if (!o.matching.empty()) p.matching = int_list(o.matching);

    VerifyOptions vo;
    vo.enumeration = enumeration(o);
    const TheoremReport report = verify_theorem(o.theorem, p, vo);
    out << to_json(report, o.timing).dump(2) << '\n';
    return report.verdict == Verdict::Refuted ? kRefuted : kOk;
}

int cmd_scan(const Options& o, std::ostream& out, std::ostream& err) {
    const Corpus corpus = load_corpus(o.corpus, o.seed);
    for (const auto& w : corpus.warnings) err << "warning: skipped malformed record, " << w << '\n';
    std::vector<std::string> checks = o.checks.empty() ? scan_ids() : o.checks;
    ScanOptions so;
    so.jobs = std::max(1, o.jobs);
    so.enumeration = enumeration(o);
    const auto reports = scan_corpus(corpus, checks, so);
    json arr = json::array();
    bool failed = false;
    for (const auto& r : reports) {
        arr.push_back(to_json(r, o.timing));
        failed = failed || (!r.conjecture && !r.clean());
    }
    out << arr.dump(2) << '\n';
    return failed ? kRefuted : kOk;
}

int cmd_graphs(const Options& o, std::ostream& out) {
    const auto graphs = o.upto ? enumerate_graphs_upto(o.order) : graphs_of_order(o.order);
    if (o.format == "json") {
        json arr = json::array();
        for (const auto& g : graphs) arr.push_back(to_graph6(g));
        out << arr.dump(2) << '\n';
    } else {
        for (const auto& g : graphs) out << to_graph6(g) << '\n';
    }
    return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Reconfiguration graphs of minimal dominating sets", "domrecon"};
    app.require_subcommand(1, 1);
    Options o;

    auto add_graph = [&](CLI::App* sub) {
        sub->add_option("--graph,-g", o.graph, "family spec, g6:<text>, or file")->required();
    };
    auto add_limit = [&](CLI::App* sub) {
        sub->add_option("--limit-mds", o.limit_mds, "cap on the number of minimal dominating sets")
            ->check(CLI::PositiveNumber);
    };
    auto add_seed = [&](CLI::App* sub) {
        sub->add_option("--seed", o.seed, "seed for random families and corpora");
    };
    const auto structure_formats = CLI::IsMember({"g6", "dot", "json"});

    auto* gen = app.add_subcommand("gen", "generate a graph family");
    gen->add_option("spec", o.spec, "family spec, e.g. kmn:2,3 or rook:3")->required();
    gen->add_option("--format,-f", o.format, "g6, dot, json or edges")
        ->check(CLI::IsMember({"g6", "dot", "json", "edges"}));
    add_seed(gen);

    auto* mds = app.add_subcommand("mds", "list the minimal dominating sets as JSON");
    add_graph(mds);
    add_limit(mds);
    add_seed(mds);
    mds->add_flag("--minimum", o.minimum, "only minimum dominating sets");

    auto* recon = app.add_subcommand("recon", "build the reconfiguration graph");
    add_graph(recon);
    recon->add_option("--format,-f", o.format, "g6, dot or json")->check(structure_formats);
    recon->add_flag("--stats", o.stats, "print order, size, components, diameter, girth and degrees");
    add_limit(recon);
    add_seed(recon);

    auto* gamma = app.add_subcommand("gamma", "build the gamma-graph (slides between minimum sets)");
    add_graph(gamma);
    gamma->add_option("--format,-f", o.format, "g6, dot or json")->check(structure_formats);
    gamma->add_flag("--stats", o.stats, "print summary metrics instead of the graph");
    add_limit(gamma);
    add_seed(gamma);

    auto* verify = app.add_subcommand("verify", "check one theorem instance");
    verify->add_option("theorem", o.theorem, "theorem id")->required()->check(CLI::IsMember(theorem_ids()));
    verify->add_option("--graph,-g", o.graph, "graph G (or tree T)");
    verify->add_option("--graph2", o.graph2, "second graph H");
    verify->add_option("--n,-n", o.n, "integer parameter n");
    verify->add_option("--m,-m", o.m, "integer parameter m");
    verify->add_option("--parts", o.parts, "part sizes, comma separated");
    verify->add_option("--seq", o.seq, "threshold creation sequence over {i,u}");
    verify->add_option("--set", o.set, "vertex set, comma separated");
    verify->add_option("--vertex", o.vertex, "distinguished vertex");
    verify->add_option("--matching", o.matching, "perfect matching G->H as a permutation");
    verify->add_option("--params", o.params, "parameters object copied from a report");
    verify->add_flag("--timing", o.timing, "record elapsed_ms");
    add_limit(verify);
    add_seed(verify);

    auto* scan = app.add_subcommand("scan", "run corpus scans");
    scan->add_option("corpus", o.corpus, "all:N, order:N, random:KIND:N:count=K, graph6 file, or family spec")
        ->required();
    scan->add_option("--check,-c", o.checks, "scan ids (default: all)")
        ->delimiter(',')
        ->check(CLI::IsMember(scan_ids()));
    scan->add_option("--jobs,-j", o.jobs, "graphs analysed in parallel")->check(CLI::PositiveNumber);
    scan->add_flag("--timing", o.timing, "record elapsed_ms");
    add_limit(scan);
    add_seed(scan);

    auto* graphs = app.add_subcommand("graphs", "list one graph per isomorphism class");
    graphs->add_option("n", o.order, "order, at most 7")->required()->check(CLI::Range(0, 7));
    graphs->add_flag("--upto", o.upto, "every order from 1 to n");
    graphs->add_option("--format,-f", o.format, "g6 or json")->check(CLI::IsMember({"g6", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*gen) return cmd_gen(o, out);
        if (*mds) return cmd_mds(o, out);
        if (*recon) return cmd_recon(o, out, ReconfigKind::Full);
        if (*gamma) return cmd_recon(o, out, ReconfigKind::Gamma);
        if (*verify) return cmd_verify(o, out);
        if (*scan) return cmd_scan(o, out, err);
        if (*graphs) return cmd_graphs(o, out);
    } catch (const SizeLimit& e) {
        err << "domrecon: " << e.what() << '\n';
        return kSizeLimit;
    } catch (const std::exception& e) {
        err << "domrecon: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"domrecon"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace domrecon::cli
