#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "domrecon/domination.hpp"
#include "domrecon/graph.hpp"
#include "domrecon/reconfig.hpp"
#include "domrecon/report.hpp"

namespace domrecon {

struct VerifyOptions {
    EnumerationOptions enumeration;
};

// Theorem checks, in dispatcher order: families, disjoint_union,
// union_empty, join_k1, join_general, kmn, multipartite, rook,
// threshold_forward, subgraph_lemma, gnv_empty, forest_connected,
// tree_lemma, split_connected, split_lemma, matching_join, product_k2,
// maxdegree.
const std::vector<std::string>& theorem_ids();

// Throws InvalidSpec for unknown ids or missing/ill-typed parameters;
// SizeLimit propagates from enumeration.
TheoremReport verify_theorem(std::string_view id, const TheoremParams& params, const VerifyOptions& opts = {});

// ---- single-instance checks shared with the corpus scans -----------------

// For independent s: the minimal dominating sets of G containing s and
// avoiding N(s) are exactly {M u s : M in M(G - N[s])}, and that map is an
// isomorphism onto the induced subgraph of R(G). r must be R(G).
std::optional<Witness> check_subgraph_lemma(const Graph& g, const ReconfigGraph& r, Mask s,
                                            const EnumerationOptions& opts = {});

// Edge M ~ M2 of R(G) read from M's side: either an expansion of some
// v in a1(M) adding exactly privates(v) - v, or a contraction onto some
// v in N2(M) removing exactly N(v) n a2(M).
bool edge_has_unique_form(const Graph& g, Mask m, Mask m2);

// R(G) restricted to minimum sets equals the gamma-graph, and R(G) is the
// gamma-graph outright when all minimal dominating sets share one size.
std::optional<Witness> check_gamma_induced(const Graph& g, const ReconfigGraph& r);

Witness make_witness(const Graph& g, std::vector<Mask> sets, std::string detail);

}  // namespace domrecon
