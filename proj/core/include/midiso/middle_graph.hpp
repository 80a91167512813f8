#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "midiso/graph.hpp"

namespace midiso {

struct OriginalVertex {
  int index = 0;
  friend bool operator==(const OriginalVertex&, const OriginalVertex&) = default;
};

/// The subdivision vertex m(i,j) created for edge {i,j}.
struct EdgeVertex {
  Edge edge;
  friend bool operator==(const EdgeVertex&, const EdgeVertex&) = default;
};

using VertexOrigin = std::variant<OriginalVertex, EdgeVertex>;

/// Mid(G) together with the provenance of its vertices.
///
/// Originals keep their indices 0..n-1. The edge-vertex of the k-th edge of G
/// in lexicographic order is n+k. m(i,j) is adjacent to v_i, v_j and every
/// m(k,l) whose edge shares an endpoint with {i,j}; originals are pairwise
/// non-adjacent.
class MiddleGraph {
 public:
  const Graph& graph() const { return graph_; }
  int original_count() const { return original_count_; }
  int edge_vertex_count() const { return static_cast<int>(source_edges_.size()); }
  /// Edges of G, indexed by edge-vertex number minus original_count().
  const std::vector<Edge>& source_edges() const { return source_edges_; }

  VertexSet originals() const { return VertexSet::range(original_count_); }
  VertexSet edge_vertices() const { return graph_.vertices() - originals(); }

  /// Index of m(i,j); DomainError if {i,j} is not an edge of G.
  int edge_vertex(const Edge& e) const;
  /// M(E0); DomainError if E0 contains a non-edge.
  VertexSet edge_vertex_set(const EdgeSet& e0) const;
  /// Inverse of edge_vertex_set on the edge-vertex part of s; originals in s
  /// are ignored.
  EdgeSet edges_of(VertexSet s) const;

  VertexOrigin classify_vertex(int v) const;
  VertexSet restrict_to_original(VertexSet s) const;

 private:
  friend MiddleGraph middle_graph(const Graph& g);

  Graph graph_;
  int original_count_ = 0;
  std::vector<Edge> source_edges_;
};

/// Builds Mid(G). Throws CapacityError when n + |E(G)| > 64.
MiddleGraph middle_graph(const Graph& g);

/// DOT with originals as circles and edge-vertices as squares labelled "m(i,j)".
std::string to_dot(const MiddleGraph& mg, std::string_view name = "Mid");

}  // namespace midiso
