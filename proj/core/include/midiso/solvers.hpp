#pragma once

#include <optional>
#include <span>

#include "midiso/graph.hpp"
#include "midiso/middle_graph.hpp"

namespace midiso {

/// An optimum value together with a set attaining it. Among equal-size
/// optima the witness is the lexicographically smallest (by sorted members).
template <class Witness>
struct Witnessed {
  int value = 0;
  Witness witness;
};

/// Forbidden pattern H for F-isolation; 1..5 vertices.
class PatternGraph {
 public:
  /// Throws DomainError unless 1 <= h.order() <= 5.
  explicit PatternGraph(Graph h);
  const Graph& graph() const { return graph_; }

 private:
  Graph graph_;
};

/// True iff V \ N[S] induces no edge.
bool is_isolating(const Graph& g, VertexSet s);
/// iota(G): minimum isolating set.
Witnessed<VertexSet> isolation_number(const Graph& g);

/// Minimum S such that G - N[S] contains no member of `patterns` as a
/// (not necessarily induced) subgraph. DomainError on an empty family.
Witnessed<VertexSet> isolation_number_general(const Graph& g, std::span<const PatternGraph> patterns);
bool is_pattern_isolating(const Graph& g, std::span<const PatternGraph> patterns, VertexSet s);

/// gamma(G): minimum dominating set.
Witnessed<VertexSet> domination_number(const Graph& g);
/// alpha(G): maximum independent set.
Witnessed<VertexSet> independence_number(const Graph& g);

/// Vertex set of some copy of H inside G[within], if one exists.
std::optional<VertexSet> find_pattern(const Graph& g, const PatternGraph& h, VertexSet within);
/// True iff some injective map V(H) -> V(G) sends every edge of H to an edge of G.
bool contains_pattern(const Graph& g, const PatternGraph& h);

/// Rewrites a minimum isolating set of Mid(G) into one of the same size that
/// avoids every original vertex: each original v_i is swapped for m(i,j),
/// j its smallest neighbour, and originals made redundant by an edge-vertex
/// already in the set are dropped. DomainError unless `s` is a minimum
/// isolating set of mg.graph().
VertexSet canonicalize_isolating_set(const MiddleGraph& mg, VertexSet s);

}  // namespace midiso
