#include "midiso/middle_graph.hpp"

#include <algorithm>
#include <sstream>

namespace midiso {

MiddleGraph middle_graph(const Graph& g) {
  const int n = g.order();
  const int m = g.edge_count();
  if (n + m > kMaxVertices) {
    throw CapacityError("Mid(G) needs " + std::to_string(n + m) + " vertices; the cap is 64");
  }
  MiddleGraph mg;
  mg.original_count_ = n;
  mg.source_edges_ = g.edges();
  mg.graph_ = Graph(n + m);

  // Edge-vertices incident to each original vertex.
  std::vector<VertexSet> incident(static_cast<std::size_t>(n));
  for (int k = 0; k < m; ++k) {
    const Edge& e = mg.source_edges_[static_cast<std::size_t>(k)];
    mg.graph_.add_edge(e.u, n + k);
    mg.graph_.add_edge(e.v, n + k);
    incident[static_cast<std::size_t>(e.u)].insert(n + k);
    incident[static_cast<std::size_t>(e.v)].insert(n + k);
  }
  for (const VertexSet& around : incident) {
    around.for_each([&](int a) {
      around.for_each([&](int b) {
        if (a < b) mg.graph_.add_edge(a, b);
      });
    });
  }
  return mg;
}

int MiddleGraph::edge_vertex(const Edge& e) const {
  Edge key = Edge::make(e.u, e.v);
  auto it = std::lower_bound(source_edges_.begin(), source_edges_.end(), key);
  if (it == source_edges_.end() || *it != key) {
    throw DomainError("{" + std::to_string(key.u) + "," + std::to_string(key.v) + "} is not an edge of G");
  }
  return original_count_ + static_cast<int>(it - source_edges_.begin());
}

VertexSet MiddleGraph::edge_vertex_set(const EdgeSet& e0) const {
  VertexSet out;
  for (const Edge& e : e0) out.insert(edge_vertex(e));
  return out;
}

EdgeSet MiddleGraph::edges_of(VertexSet s) const {
  std::vector<Edge> out;
  (s & edge_vertices()).for_each([&](int v) {
    out.push_back(source_edges_[static_cast<std::size_t>(v - original_count_)]);
  });
  return EdgeSet(std::move(out));
}

VertexOrigin MiddleGraph::classify_vertex(int v) const {
  if (v < 0 || v >= graph_.order()) {
    throw DomainError("vertex " + std::to_string(v) + " out of range for Mid(G) of order " +
                      std::to_string(graph_.order()));
  }
  if (v < original_count_) return OriginalVertex{v};
  return EdgeVertex{source_edges_[static_cast<std::size_t>(v - original_count_)]};
}

VertexSet MiddleGraph::restrict_to_original(VertexSet s) const {
  if (!s.is_subset_of(graph_.vertices())) throw DomainError("vertex set exceeds Mid(G)'s vertex range");
  return s & originals();
}

std::string to_dot(const MiddleGraph& mg, std::string_view name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int v = 0; v < mg.graph().order(); ++v) {
    std::visit(
        [&](const auto& origin) {
          using T = std::decay_t<decltype(origin)>;
          if constexpr (std::is_same_v<T, OriginalVertex>) {
            os << "  " << v << " [shape=circle, label=\"" << origin.index << "\"];\n";
          } else {
            os << "  " << v << " [shape=square, label=\"m(" << origin.edge.u << "," << origin.edge.v << ")\"];\n";
          }
        },
        mg.classify_vertex(v));
  }
  for (const Edge& e : mg.graph().edges()) os << "  " << e.u << " -- " << e.v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace midiso
