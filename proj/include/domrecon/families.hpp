#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "domrecon/graph.hpp"
#include "domrecon/reconfig.hpp"

namespace domrecon {

// mt19937_64 with platform-independent bounded draws, so seeded families
// come out bit-identical under every standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t below(std::uint64_t bound);  // uniform in [0, bound)
    bool chance(double p);
    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

enum class ThresholdStep { Isolated, Universal };

namespace family {

struct Complete { int n; };
struct Empty { int n; };
struct Path { int n; };
struct Cycle { int n; };
struct Star { int n; };  // K_{1,n}, centre 0
struct CompleteBipartite { int m; int n; };
struct CompleteMultipartite { std::vector<int> parts; };
struct Rook { int n; };
struct FoldedRook { int n; };
struct Afr { std::vector<int> parts; };
// First entry is the initial K1; its kind is irrelevant.
struct Threshold { std::vector<ThresholdStep> seq; };
// matching[i] is the H-vertex joined to G-vertex i; empty means identity.
struct MatchingJoin { Graph g; Graph h; std::vector<int> matching; };
struct RandomTree { int n; std::uint64_t seed; };
struct RandomSplit { int n; int clique; double edge_prob; std::uint64_t seed; };
struct RandomGnp { int n; double edge_prob; std::uint64_t seed; };
struct Petersen {};
struct Explicit { Graph g; };

}  // namespace family

using FamilySpec =
    std::variant<family::Complete, family::Empty, family::Path, family::Cycle, family::Star,
                 family::CompleteBipartite, family::CompleteMultipartite, family::Rook, family::FoldedRook,
                 family::Afr, family::Threshold, family::MatchingJoin, family::RandomTree, family::RandomSplit,
                 family::RandomGnp, family::Petersen, family::Explicit>;

Graph generate(const FamilySpec& spec);

// Mini-language, e.g. "kmn:2,3", "afr:1,1,2", "rook:3", "threshold:iuu",
// "tree:12:seed=7", "split:10:clique=4:p=0.5:seed=3", "gnp:8:p=0.4:seed=1",
// "matching:cycle:3/cycle:3[/2,0,1]". Composite forms "union:A/B",
// "join:A/B", "product:A/B" and "complement:A" expand to Explicit.
FamilySpec parse_family(std::string_view text);
bool is_random_family(const FamilySpec& spec);

std::vector<ThresholdStep> parse_threshold_sequence(std::string_view text);

Graph afr(const std::vector<int>& parts);
Graph folded_rook(int n);
Graph matching_join(const Graph& g, const Graph& h, const std::vector<int>& matching = {});

// Two copies of the n-fold product K_n x ... x K_n (row-indexed and
// column-indexed sets) with permutation tuple p of the first copy
// identified with p^-1 of the second. Unbounded order; n <= 5.
SparseGraph predicted_rook_reconfig(int n);
// Same graph, refusing anything over 64 vertices.
Graph predicted_rook_reconfig_dense(int n);

// R(G) u R(H) joined to G x H: M ~ (u,v) iff M meets {u,v}. Vertex order is
// M(G), then M(H), then (u,v) at u*order(H)+v. Throws UniversalVertexPresent.
SparseGraph predicted_join_reconfig(const Graph& g, const Graph& h, const ReconfigGraph& rg,
                                    const ReconfigGraph& rh);

// One canonical representative per isomorphism class, sorted by canonical
// graph6 text. n <= 7.
std::vector<Graph> graphs_of_order(int n);
// Orders 1..n concatenated.
std::vector<Graph> enumerate_graphs_upto(int n);

// ---- recognisers ---------------------------------------------------------

struct ThresholdInfo {
    std::vector<ThresholdStep> sequence;  // a creation sequence, first entry the initial K1
    int universal_additions = 0;
};
std::optional<ThresholdInfo> threshold_decomposition(const Graph& g);

struct SplitPartition {
    Mask clique = 0;
    Mask independent = 0;
};
// Partition with the largest clique side, or nullopt when g is not split.
std::optional<SplitPartition> split_partition(const Graph& g);

bool is_complete_multipartite(const Graph& g);
// G = empty graph plus at most one star K_{1,m}.
bool is_empty_plus_star(const Graph& g);

}  // namespace domrecon
