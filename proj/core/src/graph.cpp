#include "midiso/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace midiso {

VertexSet VertexSet::of(std::initializer_list<int> members) {
  VertexSet s;
  for (int v : members) {
    if (v < 0 || v >= kMaxVertices) throw DomainError("vertex index out of range: " + std::to_string(v));
    s.insert(v);
  }
  return s;
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each([&](int v) { out.push_back(v); });
  return out;
}

bool lex_less(VertexSet a, VertexSet b) {
  // Members below the lowest differing bit d are shared. The owner of d has
  // the smaller next element unless the other list ends there (a proper
  // prefix sorts first).
  std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  int d = std::countr_zero(diff);
  std::uint64_t above = d == 63 ? 0 : ~((std::uint64_t{2} << d) - 1);
  if (a.contains(d)) return (b.bits() & above) != 0;
  return (a.bits() & above) == 0;
}

EdgeSet::EdgeSet(std::initializer_list<Edge> edges) : EdgeSet(std::vector<Edge>(edges)) {}

EdgeSet::EdgeSet(std::vector<Edge> edges) : edges_(std::move(edges)) {
  for (Edge& e : edges_) {
    if (e.u == e.v) throw DomainError("edge set contains a loop");
    e = Edge::make(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool EdgeSet::contains(const Edge& e) const {
  Edge k = Edge::make(e.u, e.v);
  return std::binary_search(edges_.begin(), edges_.end(), k);
}

VertexSet EdgeSet::covered() const {
  VertexSet s;
  for (const Edge& e : edges_) s |= e.ends();
  return s;
}

bool EdgeSet::is_vertex_disjoint() const {
  VertexSet seen;
  for (const Edge& e : edges_) {
    if (seen.intersects(e.ends())) return false;
    seen |= e.ends();
  }
  return true;
}

Matching::Matching(EdgeSet edges) : edges_(std::move(edges)) {
  if (!edges_.is_vertex_disjoint()) throw DomainError("edges of a matching must be vertex-disjoint");
}

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw DomainError("negative vertex count");
  if (n > kMaxVertices) throw CapacityError("graph has " + std::to_string(n) + " vertices; the cap is 64");
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw DomainError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
  }
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
  if (adjacent(u, v)) return;
  adj_[u] |= std::uint64_t{1} << v;
  adj_[v] |= std::uint64_t{1} << u;
  ++m_;
}

std::vector<Edge> Graph::edges() const { return edges_within(vertices()); }

std::vector<Edge> Graph::edges_within(VertexSet within) const {
  std::vector<Edge> out;
  within.for_each([&](int u) {
    VertexSet higher(adj_[u] & within.bits() & ~((std::uint64_t{2} << u) - 1));
    higher.for_each([&](int v) { out.push_back({u, v}); });
  });
  return out;
}

Graph Graph::without_edges_at(VertexSet removed) const {
  Graph h(n_);
  for (const Edge& e : edges_within(vertices() - removed)) h.add_edge(e.u, e.v);
  return h;
}

Graph Graph::induced(VertexSet keep) const {
  keep &= vertices();
  std::vector<int> index(static_cast<std::size_t>(n_), -1);
  int next = 0;
  keep.for_each([&](int v) { index[static_cast<std::size_t>(v)] = next++; });
  Graph h(next);
  for (const Edge& e : edges_within(keep)) {
    h.add_edge(index[static_cast<std::size_t>(e.u)], index[static_cast<std::size_t>(e.v)]);
  }
  return h;
}

Graph Graph::permuted(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw DomainError("permutation size does not match order");
  Graph h(n_);
  for (const Edge& e : edges()) {
    h.add_edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
  }
  return h;
}

Graph Graph::complement() const {
  Graph h(n_);
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (!adjacent(u, v)) h.add_edge(u, v);
    }
  }
  return h;
}

namespace {

void require_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) {
    throw DomainError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(g.order()));
  }
}

void require_subset(const Graph& g, VertexSet s) {
  if (!s.is_subset_of(g.vertices())) throw DomainError("vertex set exceeds the graph's vertex range");
}

}  // namespace

int degree(const Graph& g, int v) {
  require_vertex(g, v);
  return g.adjacency(v).size();
}

int max_degree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v) best = std::max(best, g.adjacency(v).size());
  return best;
}

int min_degree(const Graph& g) {
  if (g.order() == 0) return 0;
  int best = kMaxVertices;
  for (int v = 0; v < g.order(); ++v) best = std::min(best, g.adjacency(v).size());
  return best;
}

VertexSet neighbors(const Graph& g, int v) {
  require_vertex(g, v);
  return g.adjacency(v);
}

VertexSet closed_neighbors(const Graph& g, int v) {
  return neighbors(g, v) | VertexSet::single(v);
}

VertexSet open_neighborhood(const Graph& g, VertexSet s) {
  require_subset(g, s);
  VertexSet out;
  s.for_each([&](int v) { out |= g.adjacency(v); });
  return out;
}

VertexSet closed_neighborhood(const Graph& g, VertexSet s) { return s | open_neighborhood(g, s); }

bool is_independent(const Graph& g, VertexSet s) {
  require_subset(g, s);
  bool ok = true;
  s.for_each([&](int v) { ok = ok && !g.adjacency(v).intersects(s); });
  return ok;
}

bool is_dominating(const Graph& g, VertexSet s) { return closed_neighborhood(g, s) == g.vertices(); }

bool has_isolated_vertex(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.adjacency(v).empty()) return true;
  }
  return false;
}

std::vector<VertexSet> components(const Graph& g, VertexSet within) {
  require_subset(g, within);
  std::vector<VertexSet> out;
  VertexSet left = within;
  while (!left.empty()) {
    VertexSet comp = VertexSet::single(left.first());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      frontier.for_each([&](int v) { next |= g.adjacency(v); });
      next = (next & within) - comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left -= comp;
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) { return components(g, g.vertices()); }

int odd_components_after_removal(const Graph& g, VertexSet removed) {
  require_subset(g, removed);
  int odd = 0;
  for (VertexSet c : components(g, g.vertices() - removed)) odd += c.size() % 2;
  return odd;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.edge_count() == g.order() - 1 && is_connected(g);
}

VertexSet leaves(const Graph& g) {
  VertexSet out;
  for (int v = 0; v < g.order(); ++v) {
    if (g.adjacency(v).size() == 1) out.insert(v);
  }
  return out;
}

std::vector<std::optional<int>> distances_from(const Graph& g, int source) {
  require_vertex(g, source);
  std::vector<std::optional<int>> dist(static_cast<std::size_t>(g.order()));
  dist[static_cast<std::size_t>(source)] = 0;
  std::deque<int> queue{source};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    g.adjacency(v).for_each([&](int w) {
      auto& d = dist[static_cast<std::size_t>(w)];
      if (!d) {
        d = *dist[static_cast<std::size_t>(v)] + 1;
        queue.push_back(w);
      }
    });
  }
  return dist;
}

std::optional<int> distance(const Graph& g, int u, int v) {
  require_vertex(g, v);
  return distances_from(g, u)[static_cast<std::size_t>(v)];
}

std::optional<int> diameter(const Graph& g) {
  int best = 0;
  for (int s = 0; s < g.order(); ++s) {
    for (const auto& d : distances_from(g, s)) {
      if (!d) return std::nullopt;
      best = std::max(best, *d);
    }
  }
  return best;
}

}  // namespace midiso
