#pragma once

#include <string>
#include <string_view>

#include "midiso/graph.hpp"

namespace midiso {

/// Parses "n" on the first line followed by one "u v" pair per line.
/// Blank lines and lines starting with '#' are skipped; duplicate edges
/// collapse. Throws ParseError naming the offending line.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

/// Standard graph6 (optionally prefixed by ">>graph6<<"); surrounding
/// whitespace is ignored. Throws ParseError on empty input, characters outside
/// 63..126, a wrong payload length or nonzero padding bits.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// Undirected DOT with vertex indices as labels.
std::string to_dot(const Graph& g, std::string_view name = "G");

}  // namespace midiso
