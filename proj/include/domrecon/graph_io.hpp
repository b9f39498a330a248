#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "domrecon/graph.hpp"

namespace domrecon {

// graph6: N(n) followed by the upper triangle in column order, six bits per
// printable byte (value + 63), zero padded. A leading ">>graph6<<" header is
// accepted on input and never written.
std::string to_graph6(const Graph& g);
std::string to_graph6(const SparseGraph& g);
Graph graph_from_graph6(std::string_view text);
SparseGraph sparse_from_graph6(std::string_view text);

// "n\nu v\nu v\n..."; blank lines and '#' comments are ignored.
std::string to_edge_list(const Graph& g);
Graph graph_from_edge_list(std::string_view text);

struct DotOptions {
    std::string name = "G";
    bool use_labels = true;
};

std::string to_dot(const Graph& g, const DotOptions& opts = {});
std::string to_dot(const SparseGraph& g, const DotOptions& opts = {});

}  // namespace domrecon
