#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "domrecon/domination.hpp"
#include "domrecon/families.hpp"
#include "domrecon/graph.hpp"
#include "domrecon/reconfig.hpp"

namespace domrecon {

using json = nlohmann::ordered_json;

enum class Verdict { Verified, Refuted, Inapplicable };
std::string to_string(Verdict v);

/// Counterexample data: the host graph plus whatever vertex sets pin the
/// failure down, enough to re-run the failing check by hand.
struct Witness {
    std::string graph6;
    std::vector<std::vector<int>> sets;
    std::string detail;
};

struct TheoremParams {
    std::optional<Graph> g;
    std::optional<Graph> h;
    std::optional<int> n;
    std::optional<int> m;
    std::vector<int> parts;
    std::vector<ThresholdStep> seq;
    std::optional<Mask> set;
    std::optional<int> vertex;
    std::vector<int> matching;
};

struct TheoremReport {
    std::string id;
    TheoremParams params;
    Verdict verdict = Verdict::Inapplicable;
    std::optional<Witness> witness;
    json stats = json::object();
    double elapsed_ms = 0;
};

struct ScanReport {
    std::string id;
    std::string corpus;
    bool conjecture = false;  // counterexamples are findings, not failures
    std::size_t examined = 0;
    std::size_t skipped = 0;
    std::vector<Witness> counterexamples;
    json stats = json::object();
    double elapsed_ms = 0;

    bool clean() const { return counterexamples.empty(); }
    std::string verdict() const { return clean() ? "no counterexample found" : "counterexample found"; }
};

// ---- JSON ------------------------------------------------------------------

json sets_json(const MdsCollection& sets);
json to_json(const Witness& w);
json to_json(const TheoremParams& p);
TheoremParams params_from_json(const json& j);
// Timing is written as 0 unless include_timing, keeping output byte-stable.
json to_json(const TheoremReport& r, bool include_timing = false);
json to_json(const ScanReport& r, bool include_timing = false);
// {kind, base, sets, edges, components, diameter}
json to_json(const ReconfigGraph& r);
json extent_json(Extent e);

std::string threshold_text(const std::vector<ThresholdStep>& seq);

}  // namespace domrecon
