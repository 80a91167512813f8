#include "midiso/generators.hpp"

#include <string>

namespace midiso {

namespace {

void require_at_least(const char* family, int value, int minimum) {
  if (value < minimum) {
    throw DomainError(std::string(family) + " needs a parameter >= " + std::to_string(minimum) + ", got " +
                      std::to_string(value));
  }
}

}  // namespace

Graph edgeless(int n) {
  require_at_least("edgeless", n, 0);
  return Graph(n);
}

Graph path(int n) {
  require_at_least("path", n, 1);
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle(int n) {
  require_at_least("cycle", n, 3);
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete(int n) {
  require_at_least("complete", n, 1);
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph complete_bipartite(int a, int b) {
  require_at_least("complete_bipartite", a, 1);
  require_at_least("complete_bipartite", b, 1);
  if (a + b > kMaxVertices) throw CapacityError("complete_bipartite exceeds 64 vertices");
  Graph g(a + b);
  for (int u = 0; u < a; ++u) {
    for (int v = a; v < a + b; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph star(int k) {
  require_at_least("star", k, 1);
  return complete_bipartite(1, k);
}

Graph spider_t1(int k) {
  require_at_least("spider_t1", k, 2);
  if (2 * k + 1 > kMaxVertices) throw CapacityError("spider_t1 exceeds 64 vertices");
  Graph g(2 * k + 1);
  for (int i = 0; i < k; ++i) {
    g.add_edge(0, 2 * i + 1);
    g.add_edge(2 * i + 1, 2 * i + 2);
  }
  return g;
}

Graph perfect_matching_graph(int k) {
  require_at_least("perfect_matching_graph", k, 1);
  if (2 * k > kMaxVertices) throw CapacityError("perfect_matching_graph exceeds 64 vertices");
  Graph g(2 * k);
  for (int i = 0; i < k; ++i) g.add_edge(2 * i, 2 * i + 1);
  return g;
}

Graph leaf_corona(const Graph& h) {
  const int n = h.order();
  if (2 * n > kMaxVertices) throw CapacityError("leaf_corona exceeds 64 vertices");
  Graph g(2 * n);
  for (const Edge& e : h.edges()) g.add_edge(e.u, e.v);
  for (int v = 0; v < n; ++v) g.add_edge(v, n + v);
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int shift = a.order();
  if (shift + b.order() > kMaxVertices) throw CapacityError("disjoint union exceeds 64 vertices");
  Graph g(shift + b.order());
  for (const Edge& e : a.edges()) g.add_edge(e.u, e.v);
  for (const Edge& e : b.edges()) g.add_edge(e.u + shift, e.v + shift);
  return g;
}

}  // namespace midiso
