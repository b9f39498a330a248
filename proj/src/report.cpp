#include "domrecon/report.hpp"

#include "domrecon/errors.hpp"
#include "domrecon/graph_io.hpp"

namespace domrecon {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Verified:
            return "verified";
        case Verdict::Refuted:
            return "refuted";
        case Verdict::Inapplicable:
            return "inapplicable";
    }
    return "unknown";
}

std::string threshold_text(const std::vector<ThresholdStep>& seq) {
    std::string s;
    for (auto step : seq) s += step == ThresholdStep::Universal ? 'u' : 'i';
    return s;
}

json sets_json(const MdsCollection& sets) {
    json out = json::array();
    for (Mask m : sets.masks()) out.push_back(bits_to_vector(m));
    return out;
}

json extent_json(Extent e) { return e ? json(*e) : json(nullptr); }

json to_json(const Witness& w) {
    json j;
    j["graph6"] = w.graph6;
    j["sets"] = w.sets;
    j["detail"] = w.detail;
    return j;
}

json to_json(const TheoremParams& p) {
    json j = json::object();
    if (p.g) j["G"] = to_graph6(*p.g);
    if (p.h) j["H"] = to_graph6(*p.h);
    if (p.n) j["n"] = *p.n;
    if (p.m) j["m"] = *p.m;
    if (!p.parts.empty()) j["parts"] = p.parts;
    if (!p.seq.empty()) j["seq"] = threshold_text(p.seq);
    if (p.set) j["set"] = bits_to_vector(*p.set);
    if (p.vertex) j["vertex"] = *p.vertex;
    if (!p.matching.empty()) j["matching"] = p.matching;
    return j;
}

TheoremParams params_from_json(const json& j) {
    TheoremParams p;
    try {
        if (j.contains("G")) p.g = graph_from_graph6(j["G"].get<std::string>());
        if (j.contains("H")) p.h = graph_from_graph6(j["H"].get<std::string>());
        if (j.contains("n")) p.n = j["n"].get<int>();
        if (j.contains("m")) p.m = j["m"].get<int>();
        if (j.contains("parts")) p.parts = j["parts"].get<std::vector<int>>();
        if (j.contains("seq")) p.seq = parse_threshold_sequence(j["seq"].get<std::string>());
        if (j.contains("set")) {
            Mask m = 0;
            for (int v : j["set"].get<std::vector<int>>()) {
                if (v < 0 || v >= kMaxVertices) throw InvalidSpec("set member out of range");
                m |= bit(v);
            }
            p.set = m;
        }
        if (j.contains("vertex")) p.vertex = j["vertex"].get<int>();
        if (j.contains("matching")) p.matching = j["matching"].get<std::vector<int>>();
    } catch (const json::exception& e) {
        throw InvalidSpec(std::string("malformed theorem parameters: ") + e.what());
    }
    return p;
}

json to_json(const TheoremReport& r, bool include_timing) {
    json j;
    j["id"] = r.id;
    j["params"] = to_json(r.params);
    j["verdict"] = to_string(r.verdict);
    if (r.witness) j["witness"] = to_json(*r.witness);
    j["stats"] = r.stats;
    j["elapsed_ms"] = include_timing ? r.elapsed_ms : 0.0;
    return j;
}

json to_json(const ScanReport& r, bool include_timing) {
    json j;
    j["id"] = r.id;
    j["params"] = {{"corpus", r.corpus}};
    j["verdict"] = r.verdict();
    j["conjecture"] = r.conjecture;
    json ce = json::array();
    for (const auto& w : r.counterexamples) ce.push_back(to_json(w));
    j["counterexamples"] = std::move(ce);
    json stats = r.stats;
    stats["examined"] = r.examined;
    stats["skipped"] = r.skipped;
    stats["counterexample_count"] = r.counterexamples.size();
    j["stats"] = std::move(stats);
    j["elapsed_ms"] = include_timing ? r.elapsed_ms : 0.0;
    return j;
}

json to_json(const ReconfigGraph& r) {
    json j;
    j["kind"] = r.kind == ReconfigKind::Full ? "reconfiguration" : "gamma";
    j["base"] = to_graph6(r.base);
    j["sets"] = sets_json(r.vertices);
    json edges = json::array();
    for (auto [u, v] : r.edges.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    j["components"] = components(r.edges);
    j["diameter"] = extent_json(diameter(r.edges));
    return j;
}

}  // namespace domrecon
