#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "domrecon/domination.hpp"
#include "domrecon/graph.hpp"
#include "domrecon/report.hpp"

namespace domrecon {

struct Corpus {
    std::string description;
    std::vector<Graph> graphs;
    std::size_t skipped = 0;
    std::vector<std::string> warnings;  // one per skipped record
};

// One graph6 record per line; blank lines and '#' comments are ignored,
// malformed records are skipped and counted.
Corpus read_corpus(std::istream& in, std::string description);

// Sources: "all:N" (every graph on 1..N vertices), "order:N",
// "random:tree:N:count=K", "random:gnp:N:count=K[:p=P]",
// "random:split:N:count=K[:clique=C][:p=P]" (random sources need a seed),
// a path to a graph6 file, or a single family spec.
Corpus load_corpus(std::string_view source, std::optional<std::uint64_t> seed = std::nullopt);

// threshold_iff, empty_iff, tree_conjecture, girth_suspicion, observation_suite
const std::vector<std::string>& scan_ids();
bool is_conjecture_scan(std::string_view id);

struct ScanOptions {
    int jobs = 1;  // graphs analysed concurrently
    EnumerationOptions enumeration;
};

// One report per requested check, in request order. Counterexamples are
// ordered by the canonical form of their host graph, so the output does not
// depend on jobs.
std::vector<ScanReport> scan_corpus(const Corpus& corpus, const std::vector<std::string>& checks,
                                    const ScanOptions& opts = {});

}  // namespace domrecon
