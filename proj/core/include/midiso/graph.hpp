#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "midiso/errors.hpp"

namespace midiso {

/// Hard cap on vertex count; a VertexSet is one machine word.
inline constexpr int kMaxVertices = 64;

/// Subset of {0..63}, stored as a bitmask.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static VertexSet of(std::initializer_list<int> members);
  /// {0, .., n-1}
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  /// Smallest member; undefined on the empty set.
  constexpr int first() const { return std::countr_zero(bits_); }

  constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  std::vector<int> members() const;

  /// Calls f(v) for each member in increasing order.
  template <class F>
  constexpr void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(std::countr_zero(b));
  }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Compares sorted member lists lexicographically.
bool lex_less(VertexSet a, VertexSet b);

/// Unordered pair stored with u < v; ordering is lexicographic.
struct Edge {
  int u = 0;
  int v = 0;

  static Edge make(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  bool touches(int x) const { return u == x || v == x; }
  bool shares_endpoint(const Edge& o) const { return touches(o.u) || touches(o.v); }
  VertexSet ends() const { return VertexSet::single(u) | VertexSet::single(v); }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free set of edges.
class EdgeSet {
 public:
  EdgeSet() = default;
  EdgeSet(std::initializer_list<Edge> edges);
  explicit EdgeSet(std::vector<Edge> edges);

  const std::vector<Edge>& edges() const { return edges_; }
  int size() const { return static_cast<int>(edges_.size()); }
  bool empty() const { return edges_.empty(); }
  bool contains(const Edge& e) const;
  /// V(E0): every endpoint of a member edge.
  VertexSet covered() const;
  /// True iff no two member edges share an endpoint.
  bool is_vertex_disjoint() const;

  auto begin() const { return edges_.begin(); }
  auto end() const { return edges_.end(); }

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;
  friend auto operator<=>(const EdgeSet& a, const EdgeSet& b) { return a.edges_ <=> b.edges_; }

 private:
  std::vector<Edge> edges_;
};

/// EdgeSet whose edges are pairwise vertex-disjoint.
class Matching {
 public:
  Matching() = default;
  /// Throws DomainError if two edges share an endpoint.
  explicit Matching(EdgeSet edges);

  const EdgeSet& edges() const { return edges_; }
  int size() const { return edges_.size(); }
  VertexSet covered() const { return edges_.covered(); }

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  EdgeSet edges_;
};

/// Simple undirected graph on vertices 0..n-1 (n <= 64), adjacency as bitsets.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges);

  /// Adds {u, v}; no-op if already present. Throws DomainError on a loop or
  /// out-of-range endpoint.
  void add_edge(int u, int v);

  int order() const { return n_; }
  int edge_count() const { return m_; }
  VertexSet vertices() const { return VertexSet::range(n_); }

  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
  /// Open neighbourhood; v is not range-checked.
  VertexSet adjacency(int v) const { return VertexSet(adj_[v]); }

  /// Edges in lexicographic order.
  std::vector<Edge> edges() const;
  /// Edges with both endpoints in `within`, lexicographic.
  std::vector<Edge> edges_within(VertexSet within) const;

  /// Graph on the same vertex labels with every edge touching `removed` deleted.
  Graph without_edges_at(VertexSet removed) const;
  /// Induced subgraph on `keep`, relabelled to 0..|keep|-1 in increasing order.
  Graph induced(VertexSet keep) const;
  /// Relabels vertex v to perm[v].
  Graph permuted(std::span<const int> perm) const;
  Graph complement() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  int m_ = 0;
  std::array<std::uint64_t, kMaxVertices> adj_{};
};

// Elementary queries. Every vertex argument is range-checked and throws
// DomainError when out of range.

int degree(const Graph& g, int v);
int max_degree(const Graph& g);
int min_degree(const Graph& g);
VertexSet neighbors(const Graph& g, int v);
VertexSet closed_neighbors(const Graph& g, int v);

/// N(S): union of the open neighbourhoods of S's members.
VertexSet open_neighborhood(const Graph& g, VertexSet s);
/// N[S] = S ∪ N(S).
VertexSet closed_neighborhood(const Graph& g, VertexSet s);

bool is_independent(const Graph& g, VertexSet s);
bool is_dominating(const Graph& g, VertexSet s);
bool has_isolated_vertex(const Graph& g);

/// Connected components of G[within], each as a vertex set, ordered by
/// smallest member.
std::vector<VertexSet> components(const Graph& g, VertexSet within);
std::vector<VertexSet> components(const Graph& g);
/// o(G - S): number of odd-order components of G - S.
int odd_components_after_removal(const Graph& g, VertexSet removed);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
VertexSet leaves(const Graph& g);

/// BFS distances from `source`; nullopt marks unreachable vertices.
std::vector<std::optional<int>> distances_from(const Graph& g, int source);
/// Shortest-path length; nullopt when u and v are disconnected.
std::optional<int> distance(const Graph& g, int u, int v);
/// Largest distance over all pairs; nullopt when g is disconnected.
/// The empty graph and K_1 have diameter 0.
std::optional<int> diameter(const Graph& g);

}  // namespace midiso
