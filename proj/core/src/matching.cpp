#include "midiso/matching.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <string>

#include "lex_search.hpp"

namespace midiso {

namespace {

void require_edges_of(const Graph& g, const EdgeSet& edges) {
  for (const Edge& e : edges) {
    if (e.v >= g.order() || !g.adjacent(e.u, e.v)) {
      throw DomainError("{" + std::to_string(e.u) + "," + std::to_string(e.v) + "} is not an edge of the graph");
    }
  }
}

// Edmonds' blossom algorithm restricted to G[within]. Returns mate[v] or -1.
class Blossom {
 public:
  Blossom(const Graph& g, VertexSet within)
      : g_(g), within_(within & g.vertices()), n_(g.order()), mate_(static_cast<std::size_t>(n_), -1) {}

  const std::vector<int>& solve() {
    within_.for_each([&](int root) {
      if (mate_[idx(root)] != -1) return;
      int v = find_augmenting_path(root);
      while (v != -1) {
        int pv = parent_[idx(v)];
        int next = mate_[idx(pv)];
        mate_[idx(v)] = pv;
        mate_[idx(pv)] = v;
        v = next;
      }
    });
    return mate_;
  }

 private:
  static std::size_t idx(int v) { return static_cast<std::size_t>(v); }

  int lowest_common_base(int a, int b) {
    std::vector<char> seen(idx(n_), 0);
    while (true) {
      a = base_[idx(a)];
      seen[idx(a)] = 1;
      if (mate_[idx(a)] == -1) break;
      a = parent_[idx(mate_[idx(a)])];
    }
    while (true) {
      b = base_[idx(b)];
      if (seen[idx(b)]) return b;
      b = parent_[idx(mate_[idx(b)])];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[idx(v)] != b) {
      in_blossom_[idx(base_[idx(v)])] = 1;
      in_blossom_[idx(base_[idx(mate_[idx(v)])])] = 1;
      parent_[idx(v)] = child;
      child = mate_[idx(v)];
      v = parent_[idx(mate_[idx(v)])];
    }
  }

  int find_augmenting_path(int root) {
    used_.assign(idx(n_), 0);
    parent_.assign(idx(n_), -1);
    base_.resize(idx(n_));
    for (int i = 0; i < n_; ++i) base_[idx(i)] = i;
    used_[idx(root)] = 1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      VertexSet nb = g_.adjacency(v) & within_;
      for (std::uint64_t bits = nb.bits(); bits != 0; bits &= bits - 1) {
        int to = std::countr_zero(bits);
        if (base_[idx(v)] == base_[idx(to)] || mate_[idx(v)] == to) continue;
        if (to == root || (mate_[idx(to)] != -1 && parent_[idx(mate_[idx(to)])] != -1)) {
          int cur = lowest_common_base(v, to);
          in_blossom_.assign(idx(n_), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (in_blossom_[idx(base_[idx(i)])]) {
              base_[idx(i)] = cur;
              if (!used_[idx(i)]) {
                used_[idx(i)] = 1;
                queue.push_back(i);
              }
            }
          }
        } else if (parent_[idx(to)] == -1) {
          parent_[idx(to)] = v;
          if (mate_[idx(to)] == -1) return to;
          used_[idx(mate_[idx(to)])] = 1;
          queue.push_back(mate_[idx(to)]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  VertexSet within_;
  int n_;
  std::vector<int> mate_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<char> used_;
  std::vector<char> in_blossom_;
};

// Edges indexed in lexicographic order, with incidence lists.
struct EdgeIndex {
  explicit EdgeIndex(const Graph& g) : edges(g.edges()), incident(static_cast<std::size_t>(g.order())) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      incident[static_cast<std::size_t>(edges[i].u)].push_back(static_cast<int>(i));
      incident[static_cast<std::size_t>(edges[i].v)].push_back(static_cast<int>(i));
    }
    for (auto& list : incident) std::sort(list.begin(), list.end());
  }

  EdgeSet to_set(const std::vector<int>& ids) const {
    std::vector<Edge> out;
    out.reserve(ids.size());
    for (int i : ids) out.push_back(edges[static_cast<std::size_t>(i)]);
    return EdgeSet(std::move(out));
  }

  std::vector<Edge> edges;
  std::vector<std::vector<int>> incident;
};

// Lowest edge of G with both endpoints outside `covered`.
std::optional<Edge> first_open_edge(const Graph& g, VertexSet covered) {
  VertexSet open = g.vertices() - covered;
  std::optional<Edge> found;
  open.for_each([&](int u) {
    if (found) return;
    VertexSet nb = g.adjacency(u) & open;
    if (!nb.empty()) found = Edge{u, nb.first()};
  });
  return found;
}

// Edges with both endpoints outside `covered` such that no single edge of G
// touches two of them; each needs its own edge in any completion.
int open_edge_packing(const Graph& g, VertexSet covered) {
  VertexSet avail = g.vertices() - covered;
  int count = 0;
  while (auto e = first_open_edge(g, g.vertices() - avail)) {
    ++count;
    VertexSet reach = g.adjacency(e->u) | g.adjacency(e->v) | e->ends();
    avail -= reach;
  }
  return count;
}

// Smallest maximal matching: some edge sharing an endpoint with the first
// undominated edge must be in M.
class MinMaximalMatchingSearch {
 public:
  explicit MinMaximalMatchingSearch(const Graph& g)
      : g_(g), index_(g), excluded_(index_.edges.size(), 0) {}

  bool search(VertexSet covered, int budget, int lower, std::vector<int>& chosen) {
    std::optional<Edge> open = first_open_edge(g_, covered);
    if (!open) return true;
    if (budget <= 0 || open_edge_packing(g_, covered) > budget) return false;

    std::vector<int> candidates;
    for (int end : {open->u, open->v}) {
      for (int id : index_.incident[static_cast<std::size_t>(end)]) {
        const Edge& f = index_.edges[static_cast<std::size_t>(id)];
        if (id < lower || excluded_[static_cast<std::size_t>(id)] || covered.intersects(f.ends())) continue;
        candidates.push_back(id);
      }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::vector<int> tried;
    bool found = false;
    for (int id : candidates) {
      const Edge& f = index_.edges[static_cast<std::size_t>(id)];
      chosen.push_back(id);
      if (search(covered | f.ends(), budget - 1, lower, chosen)) {
        found = true;
        break;
      }
      chosen.pop_back();
      excluded_[static_cast<std::size_t>(id)] = 1;
      tried.push_back(id);
    }
    for (int id : tried) excluded_[static_cast<std::size_t>(id)] = 0;
    return found;
  }

  Witnessed<Matching> solve() {
    std::vector<int> chosen;
    int k = 0;
    while (!search(VertexSet(), k, 0, chosen)) ++k;

    auto feasible = [&](const std::vector<int>& forced, int lower) -> std::optional<std::vector<int>> {
      VertexSet covered;
      for (int id : forced) {
        const Edge& f = index_.edges[static_cast<std::size_t>(id)];
        if (covered.intersects(f.ends())) return std::nullopt;
        covered |= f.ends();
      }
      std::vector<int> rest = forced;
      if (!search(covered, k - static_cast<int>(forced.size()), lower, rest)) return std::nullopt;
      return rest;
    };
    std::vector<int> best = detail::lexicographically_smallest(chosen, feasible);
    return {k, Matching(index_.to_set(best))};
  }

 private:
  const Graph& g_;
  EdgeIndex index_;
  std::vector<char> excluded_;
};

// tau(G) over arbitrary edge subsets: the first edge with both ends uncovered
// must lose an end to some chosen edge incident to it.
class ThetaSearch {
 public:
  explicit ThetaSearch(const Graph& g) : g_(g), index_(g), excluded_(index_.edges.size(), 0) {}

  bool search(VertexSet covered, int budget, int lower, std::vector<int>& chosen) {
    std::optional<Edge> open = first_open_edge(g_, covered);
    if (!open) return true;
    if (budget <= 0) return false;

    std::vector<int> candidates;
    for (int end : {open->u, open->v}) {
      for (int id : index_.incident[static_cast<std::size_t>(end)]) {
        if (id < lower || excluded_[static_cast<std::size_t>(id)]) continue;
        if (std::find(chosen.begin(), chosen.end(), id) != chosen.end()) continue;
        candidates.push_back(id);
      }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::vector<int> tried;
    bool found = false;
    for (int id : candidates) {
      chosen.push_back(id);
      if (search(covered | index_.edges[static_cast<std::size_t>(id)].ends(), budget - 1, lower, chosen)) {
        found = true;
        break;
      }
      chosen.pop_back();
      excluded_[static_cast<std::size_t>(id)] = 1;
      tried.push_back(id);
    }
    for (int id : tried) excluded_[static_cast<std::size_t>(id)] = 0;
    return found;
  }

  Witnessed<EdgeSet> solve() {
    std::vector<int> chosen;
    int k = 0;
    while (!search(VertexSet(), k, 0, chosen)) ++k;

    auto feasible = [&](const std::vector<int>& forced, int lower) -> std::optional<std::vector<int>> {
      VertexSet covered;
      for (int id : forced) covered |= index_.edges[static_cast<std::size_t>(id)].ends();
      std::vector<int> rest = forced;
      if (!search(covered, k - static_cast<int>(forced.size()), lower, rest)) return std::nullopt;
      return rest;
    };
    std::vector<int> best = detail::lexicographically_smallest(chosen, feasible);
    return {k, index_.to_set(best)};
  }

 private:
  const Graph& g_;
  EdgeIndex index_;
  std::vector<char> excluded_;
};

// Decides each vertex in increasing order: matched to a later undecided
// neighbour, or left unmatched. With `maximal_only`, unmatched vertices must
// stay pairwise non-adjacent, which is exactly maximality.
class MatchingEnumerator {
 public:
  MatchingEnumerator(const Graph& g, bool maximal_only, const std::function<bool(const Matching&)>& visit)
      : g_(g), maximal_only_(maximal_only), visit_(visit) {}

  void run() { recurse(VertexSet(), VertexSet()); }

 private:
  bool recurse(VertexSet matched, VertexSet unmatched) {
    VertexSet undecided = g_.vertices() - matched - unmatched;
    if (undecided.empty()) return visit_(Matching(EdgeSet(chosen_)));
    int u = undecided.first();
    bool go_on = true;
    (g_.adjacency(u) & undecided).for_each([&](int w) {
      if (!go_on) return;
      chosen_.push_back({u, w});
      go_on = recurse(matched | VertexSet::single(u) | VertexSet::single(w), unmatched);
      chosen_.pop_back();
    });
    if (!go_on) return false;
    if (maximal_only_ && g_.adjacency(u).intersects(unmatched)) return true;
    return recurse(matched, unmatched | VertexSet::single(u));
  }

  const Graph& g_;
  bool maximal_only_;
  const std::function<bool(const Matching&)>& visit_;
  std::vector<Edge> chosen_;
};

}  // namespace

bool is_matching(const Graph& g, const EdgeSet& edges) {
  for (const Edge& e : edges) {
    if (e.v >= g.order() || !g.adjacent(e.u, e.v)) return false;
  }
  return edges.is_vertex_disjoint();
}

bool is_maximal_matching(const Graph& g, const Matching& m) {
  require_edges_of(g, m.edges());
  return is_independent(g, g.vertices() - m.covered());
}

bool is_perfect(const Graph& g, const Matching& m) {
  require_edges_of(g, m.edges());
  return m.covered().size() == g.order();
}

bool is_near_perfect(const Graph& g, const Matching& m) {
  require_edges_of(g, m.edges());
  return m.covered().size() == g.order() - 1;
}

int matching_number(const Graph& g, VertexSet within) {
  Blossom blossom(g, within);
  const std::vector<int>& mate = blossom.solve();
  int matched = 0;
  for (int v : mate) matched += v != -1 ? 1 : 0;
  return matched / 2;
}

Witnessed<Matching> maximum_matching(const Graph& g) {
  const int nu = matching_number(g, g.vertices());
  // Lexicographically smallest: take each edge, in order, whenever the rest of
  // the graph can still complete a maximum matching.
  std::vector<Edge> chosen;
  VertexSet covered;
  for (const Edge& e : g.edges()) {
    if (static_cast<int>(chosen.size()) == nu) break;
    if (covered.intersects(e.ends())) continue;
    VertexSet after = covered | e.ends();
    if (1 + matching_number(g, g.vertices() - after) == nu - static_cast<int>(chosen.size())) {
      chosen.push_back(e);
      covered = after;
    }
  }
  return {nu, Matching(EdgeSet(std::move(chosen)))};
}

Witnessed<Matching> min_maximal_matching(const Graph& g) { return MinMaximalMatchingSearch(g).solve(); }

void for_each_maximal_matching(const Graph& g, const std::function<bool(const Matching&)>& visit) {
  MatchingEnumerator(g, true, visit).run();
}

std::vector<Matching> enumerate_maximal_matchings(const Graph& g) {
  std::vector<Matching> out;
  for_each_maximal_matching(g, [&](const Matching& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

void for_each_matching(const Graph& g, const std::function<bool(const Matching&)>& visit) {
  MatchingEnumerator(g, false, visit).run();
}

bool theta_member(const Graph& g, const EdgeSet& e0) {
  require_edges_of(g, e0);
  return is_independent(g, g.vertices() - e0.covered());
}

Witnessed<EdgeSet> tau(const Graph& g) { return ThetaSearch(g).solve(); }

Matching theta_to_maximal_matching(const Graph& g, const EdgeSet& e0) {
  if (!theta_member(g, e0)) throw DomainError("edge set is not in Theta(G)");
  if (e0.size() != tau(g).value) throw DomainError("edge set is not a minimum member of Theta(G)");

  std::vector<Edge> current = e0.edges();
  while (true) {
    std::sort(current.begin(), current.end());
    std::optional<std::pair<std::size_t, int>> clash;  // (index of e', shared endpoint)
    for (std::size_t i = 0; i < current.size() && !clash; ++i) {
      for (std::size_t j = i + 1; j < current.size() && !clash; ++j) {
        if (current[i].touches(current[j].u)) clash = std::pair{j, current[j].u};
        else if (current[i].touches(current[j].v)) clash = std::pair{j, current[j].v};
      }
    }
    if (!clash) break;

    const Edge later = current[clash->first];
    const int far_end = later.u == clash->second ? later.v : later.u;
    VertexSet covered;
    for (const Edge& e : current) covered |= e.ends();
    VertexSet fresh = g.adjacency(far_end) - covered;
    if (!fresh.empty()) {
      current[clash->first] = Edge::make(far_end, fresh.first());
    } else {
      current.erase(current.begin() + static_cast<std::ptrdiff_t>(clash->first));
    }
  }
  Matching m{EdgeSet(std::move(current))};
  if (!is_maximal_matching(g, m)) throw DomainError("exchange procedure did not reach a maximal matching");
  return m;
}

bool is_equimatchable(const Graph& g) {
  return min_maximal_matching(g).value == matching_number(g, g.vertices());
}

bool is_randomly_matchable(const Graph& g) {
  bool all_perfect = true;
  for_each_maximal_matching(g, [&](const Matching& m) {
    all_perfect = m.covered().size() == g.order();
    return all_perfect;
  });
  return all_perfect;
}

}  // namespace midiso
