#include "domrecon/scan.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <exception>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>


#include "domrecon/canonical.hpp"
#include "domrecon/errors.hpp"
#include "domrecon/families.hpp"
#include "domrecon/graph_io.hpp"
#include "domrecon/reconfig.hpp"
#include "domrecon/theorems.hpp"

namespace domrecon {

Corpus read_corpus(std::istream& in, std::string description) {
    Corpus corpus;
    corpus.description = std::move(description);
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
        const auto start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#') continue;
        try {
            corpus.graphs.push_back(graph_from_graph6(std::string_view(line).substr(start)));
        } catch (const Error& e) {
            ++corpus.skipped;
            corpus.warnings.push_back("line " + std::to_string(number) + ": " + e.what());
        }
    }
    return corpus;
}

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        const auto next = text.find(sep, pos);
        out.push_back(text.substr(pos, next - pos));
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return out;
}

template <typename T>
T number(std::string_view text, std::string_view what) {
    T value{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw InvalidSpec("bad " + std::string(what) + " '" + std::string(text) + "'");
    }
    return value;
}

double probability(std::string_view text) {
    const double p = number<double>(text, "probability");
    if (p < 0 || p > 1) throw InvalidSpec("probability out of range");
    return p;
}

Corpus random_corpus(std::string_view source, const std::vector<std::string_view>& parts,
                     std::optional<std::uint64_t> seed) {
    if (parts.size() < 3) throw InvalidSpec("random corpus needs a kind and an order");
    const std::string_view kind = parts[1];
    const int n = number<int>(parts[2], "order");
    int count = -1;
    double p = 0.5;
    int clique = n / 2;
    for (std::size_t i = 3; i < parts.size(); ++i) {
        const auto eq = parts[i].find('=');
        if (eq == std::string_view::npos) throw InvalidSpec("expected key=value in '" + std::string(parts[i]) + "'");
        const auto key = parts[i].substr(0, eq);
        const auto value = parts[i].substr(eq + 1);
        if (key == "count") {
            count = number<int>(value, "count");
        } else if (key == "p") {
            p = probability(value);
        } else if (key == "clique") {
            clique = number<int>(value, "clique size");
        } else if (key == "seed") {
            seed = number<std::uint64_t>(value, "seed");
        } else {
            throw InvalidSpec("unknown corpus option '" + std::string(key) + "'");
        }
    }
    if (count < 0) throw InvalidSpec("random corpus needs count=K");
    if (!seed) throw InvalidSpec("random corpus needs a seed");

    Corpus corpus;
    corpus.description = std::string(source) + ":seed=" + std::to_string(*seed);
    Rng master(*seed);
    for (int i = 0; i < count; ++i) {
        const std::uint64_t s = master.next();
        if (kind == "tree") {
            corpus.graphs.push_back(generate(family::RandomTree{n, s}));
        } else if (kind == "gnp") {
            corpus.graphs.push_back(generate(family::RandomGnp{n, p, s}));
        } else if (kind == "split") {
            corpus.graphs.push_back(generate(family::RandomSplit{n, clique, p, s}));
        } else {
            throw InvalidSpec("unknown random corpus kind '" + std::string(kind) + "'");
        }
    }
    return corpus;
}

}  // namespace

Corpus load_corpus(std::string_view source, std::optional<std::uint64_t> seed) {
    const auto parts = split(source, ':');
    if (parts[0] == "all" || parts[0] == "order") {
        if (parts.size() != 2) throw InvalidSpec("expected " + std::string(parts[0]) + ":N");
        const int n = number<int>(parts[1], "order");
        Corpus corpus;
        corpus.description = std::string(source);
        corpus.graphs = parts[0] == "all" ? enumerate_graphs_upto(n) : graphs_of_order(n);
        return corpus;
    }
    if (parts[0] == "random") return random_corpus(source, parts, seed);

    const std::filesystem::path path{std::string(source)};
    std::error_code ec;
    if (std::filesystem::is_regular_file(path, ec)) {
        std::ifstream in(path);
        if (!in) throw InvalidSpec("cannot open corpus file '" + path.string() + "'");
        return read_corpus(in, path.filename().string());
    }

    Corpus corpus;
    corpus.description = std::string(source);
    corpus.graphs.push_back(generate(parse_family(source)));
    return corpus;
}

const std::vector<std::string>& scan_ids() {
    static const std::vector<std::string> ids = {"threshold_iff", "empty_iff", "tree_conjecture", "girth_suspicion",
                                                 "observation_suite"};
    return ids;
}

bool is_conjecture_scan(std::string_view id) { return id == "tree_conjecture" || id == "girth_suspicion"; }

namespace {

using Clock = std::chrono::steady_clock;

struct Tally {
    std::vector<Witness> found;
    std::map<std::string, std::int64_t> sums;
    std::map<std::string, std::int64_t> maxima;

    void high(const std::string& key, std::int64_t value) {
        auto [it, fresh] = maxima.emplace(key, value);
        if (!fresh) it->second = std::max(it->second, value);
    }
};

void threshold_iff(const Graph& g, const ReconfigGraph& r, Tally& t) {
    const bool complete = is_complete(r.edges);
    const auto thr = threshold_decomposition(g);
    t.sums["threshold_graphs"] += thr ? 1 : 0;
    t.sums["complete_r"] += complete ? 1 : 0;
    if (complete != thr.has_value()) {
        t.found.push_back(make_witness(g, {}, complete ? "R(G) is complete but G is not threshold"
                                                       : "G is threshold but R(G) is not complete"));
    } else if (thr && r.order() != thr->universal_additions + 1) {
        t.found.push_back(make_witness(g, {}, "R(G) = K" + std::to_string(r.order()) + " but G has " +
                                                  std::to_string(thr->universal_additions) + " universal additions"));
    }
}

void empty_iff(const Graph& g, const ReconfigGraph& r, Tally& t) {
    const bool edgeless = r.edges.size() == 0;
    t.sums["edgeless_r"] += edgeless ? 1 : 0;
    if (edgeless && g.size() != 0) {
        t.found.push_back(make_witness(g, {}, "R(G) is edgeless but G has edges"));
    } else if (g.size() == 0 && r.order() != 1) {
        t.found.push_back(make_witness(g, {}, "G is edgeless but R(G) is not K1"));
    }
}

void tree_conjecture(const Graph& g, const ReconfigGraph& r, Tally& t) {
    const bool tree = is_tree(r.edges);
    const bool shape = is_empty_plus_star(g);
    t.sums["tree_r"] += tree ? 1 : 0;
    if (tree != shape) {
        t.found.push_back(make_witness(g, {}, tree ? "R(G) is a tree but G is not an empty graph plus a star"
                                                   : "G is an empty graph plus a star but R(G) is not a tree"));
    }
}

// Records both readings of the suspected girth bound: "at most 5" is
// flagged, "at least 5" is counted.
void girth_suspicion(const Graph& g, const ReconfigGraph& r, Tally& t) {
    if (is_tree(r.edges)) {
        ++t.sums["tree_r"];
        return;
    }
    ++t.sums["non_tree_r"];
    const Extent gi = girth(r.edges);
    if (!gi) {
        ++t.sums["girth_inf"];
        t.found.push_back(make_witness(g, {}, "non-tree R(G) without cycles"));
        return;
    }
    ++t.sums["girth_" + std::to_string(*gi)];
    t.high("max_finite_girth", *gi);
    if (*gi < 5) ++t.sums["girth_below_5"];
    if (*gi > 5) t.found.push_back(make_witness(g, {}, "non-tree R(G) with girth " + std::to_string(*gi)));
}

void observation_suite(const Graph& g, const ReconfigGraph& r, const EnumerationOptions& opts, Tally& t) {
    const int n = g.order();
    if (n > 20) throw SizeLimit("observation suite walks every subset; limited to 20 vertices");
    bool iso_bad = false, a2_bad = false, a1n1_bad = false;
    for (Mask s = 0; s <= g.vertices(); ++s) {
        if (coverage(g, s).once != g.vertices()) continue;
        ++t.sums["dominating_sets"];
        const VertexClasses k = vertex_classes(g, s);
        for_each_bit(s, [&](int v) {
            if ((g.neighbors(v) & s) == 0 && (k.critical & bit(v)) == 0 && !iso_bad) {
                iso_bad = true;
                t.found.push_back(make_witness(g, {s, bit(v)}, "vertex without neighbours in S is not critical"));
            }
        });
        for_each_bit(k.a2, [&](int v) {
            if ((g.neighbors(v) & ~k.n2) != 0 && !a2_bad) {
                a2_bad = true;
                t.found.push_back(make_witness(g, {s, bit(v)}, "a2 vertex has a neighbour outside N2"));
            }
        });
        if (popcount(k.a1) > popcount(k.n1) && !a1n1_bad) {
            a1n1_bad = true;
            t.found.push_back(make_witness(g, {s}, "|a1(S)| exceeds |N1(S)|"));
        }
        if (s == g.vertices()) break;
    }

    if (isolated_vertices(g) == 0) {
        for (Mask m : r.vertices.masks()) {
            ++t.sums["complements_checked"];
            if (!dominates(g, g.vertices() & ~m)) {
                t.found.push_back(make_witness(g, {m}, "V - M does not dominate"));
                break;
            }
        }
    }

    for (Mask s = 1; s <= g.vertices(); ++s) {
        if (is_independent(g, s)) {
            ++t.sums["independent_sets_checked"];
            if (auto w = check_subgraph_lemma(g, r, s, opts)) {
                t.found.push_back(std::move(*w));
                break;
            }
        }
        if (s == g.vertices()) break;
    }

    if (auto w = check_gamma_induced(g, r)) t.found.push_back(std::move(*w));
}

struct GraphResult {
    std::vector<Tally> tallies;
    std::exception_ptr error;
};

GraphResult analyse(const Graph& g, const std::vector<std::string>& checks, const EnumerationOptions& opts) {
    GraphResult out;
    out.tallies.resize(checks.size());
    const MdsCollection mds = enumerate_mds(g, opts);
    const ReconfigGraph r = reconfig_from_sets(g, mds, ReconfigKind::Full);
    for (std::size_t i = 0; i < checks.size(); ++i) {
        Tally& t = out.tallies[i];
        t.high("max_mds", static_cast<std::int64_t>(mds.size()));
        const auto& id = checks[i];
        if (id == "threshold_iff") {
            threshold_iff(g, r, t);
        } else if (id == "empty_iff") {
            empty_iff(g, r, t);
        } else if (id == "tree_conjecture") {
            tree_conjecture(g, r, t);
        } else if (id == "girth_suspicion") {
            girth_suspicion(g, r, t);
        } else {
            observation_suite(g, r, opts, t);
        }
    }
    return out;
}

}  // namespace

std::vector<ScanReport> scan_corpus(const Corpus& corpus, const std::vector<std::string>& checks,
                                    const ScanOptions& opts) {
    for (const auto& id : checks) {
        if (std::find(scan_ids().begin(), scan_ids().end(), id) == scan_ids().end()) {
            throw InvalidSpec("unknown scan id '" + id + "'");
        }
    }
    const auto start = Clock::now();
    EnumerationOptions enumeration = opts.enumeration;
    enumeration.threads = 1;

    const auto count = static_cast<std::int64_t>(corpus.graphs.size());
    std::vector<GraphResult> results(corpus.graphs.size());
    auto run_one = [&](std::int64_t i) {
        try {
            results[i] = analyse(corpus.graphs[i], checks, enumeration);
        } catch (...) {
            results[i].error = std::current_exception();
        }
    };
    if (opts.jobs > 1) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(opts.jobs)
        for (std::int64_t i = 0; i < count; ++i) run_one(i);
    } else {
        for (std::int64_t i = 0; i < count; ++i) run_one(i);
    }
    for (const auto& res : results) {
        if (res.error) std::rethrow_exception(res.error);
    }

    std::vector<ScanReport> reports;
    for (std::size_t c = 0; c < checks.size(); ++c) {
        ScanReport rep;
        rep.id = checks[c];
        rep.corpus = corpus.description;
        rep.conjecture = is_conjecture_scan(checks[c]);
        rep.examined = corpus.graphs.size();
        rep.skipped = corpus.skipped;
        std::map<std::string, std::int64_t> sums, maxima;
        std::vector<std::pair<std::string, Witness>> found;
        for (auto& res : results) {
            Tally& t = res.tallies[c];
            for (const auto& [k, v] : t.sums) sums[k] += v;
            for (const auto& [k, v] : t.maxima) maxima[k] = std::max(maxima[k], v);
            for (auto& w : t.found) {
                auto key = canonical_form(graph_from_graph6(w.graph6)).text;
                found.emplace_back(std::move(key), std::move(w));
            }
        }
        std::stable_sort(found.begin(), found.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& [key, w] : found) rep.counterexamples.push_back(std::move(w));
        for (const auto& [k, v] : sums) rep.stats[k] = v;
        for (const auto& [k, v] : maxima) rep.stats[k] = v;
        reports.push_back(std::move(rep));
    }
    const double elapsed = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    for (auto& rep : reports) rep.elapsed_ms = elapsed;
    return reports;
}

}  // namespace domrecon
