#pragma once

#include <string_view>

#include "midiso/graph.hpp"

namespace midiso::cli {

/// Resolves a command-line graph argument, trying in order:
///   a generator spec "name:args" (path:N, cycle:N, complete:N, kbip:A,B,
///   star:K, spider:K, matching:K, edgeless:N),
///   a readable file holding graph6 or an edge list,
///   inline graph6.
/// Throws ParseError when none applies and DomainError on out-of-range
/// generator parameters.
Graph resolve_graph(std::string_view arg);

/// File contents are graph6 when they form a single token that is not purely
/// numeric; otherwise they are read as an edge list.
Graph parse_graph_text(std::string_view text);

}  // namespace midiso::cli
