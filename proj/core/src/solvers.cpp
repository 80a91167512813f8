#include "midiso/solvers.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "lex_search.hpp"

namespace midiso {

namespace {

VertexSet above(int lower) { return lower >= 64 ? VertexSet() : VertexSet(~std::uint64_t{0} << lower); }

VertexSet from_members(const std::vector<int>& members) {
  VertexSet s;
  for (int v : members) s.insert(v);
  return s;
}

// Minimum-cardinality S for a property that is monotone under supersets.
// violation(S) is nullopt when S is feasible; otherwise it is a vertex set
// that every feasible superset of S must meet. Search is iterative deepening
// on |S|, branching over the violation set; a branch already explored is
// excluded from its later siblings.
class HittingSetSearch {
 public:
  using Violation = std::function<std::optional<VertexSet>(VertexSet)>;

  HittingSetSearch(int n, Violation violation) : n_(n), violation_(std::move(violation)) {}

  Witnessed<VertexSet> solve() {
    VertexSet found;
    int k = 0;
    while (!search(VertexSet(), k, VertexSet::range(n_), found)) ++k;

    auto feasible = [&](const std::vector<int>& forced, int lower) -> std::optional<std::vector<int>> {
      VertexSet start = from_members(forced);
      VertexSet out;
      if (search(start, k - start.size(), VertexSet::range(n_) & above(lower), out)) return out.members();
      return std::nullopt;
    };
    VertexSet best = from_members(detail::lexicographically_smallest(found.members(), feasible));
    return {best.size(), best};
  }

 private:
  bool search(VertexSet s, int budget, VertexSet allowed, VertexSet& out) const {
    std::optional<VertexSet> hit = violation_(s);
    if (!hit) {
      out = s;
      return true;
    }
    if (budget <= 0) return false;
    VertexSet candidates = (*hit & allowed) - s;
    bool done = false;
    candidates.for_each([&](int w) {
      if (done) return;
      if (search(s | VertexSet::single(w), budget - 1, allowed, out)) {
        done = true;
        return;
      }
      allowed.erase(w);
    });
    return done;
  }

  int n_;
  Violation violation_;
};

// Maximum independent set inside `cand`. Vertices of degree <= 1 in the
// candidate graph are always taken; otherwise branch on a max-degree vertex.
VertexSet max_independent(const Graph& g, VertexSet cand) {
  VertexSet taken;
  while (true) {
    if (cand.empty()) return taken;
    int pick = -1;
    int pick_deg = -1;
    bool forced = false;
    cand.for_each([&](int v) {
      if (forced) return;
      int d = (g.adjacency(v) & cand).size();
      if (d <= 1) {
        pick = v;
        forced = true;
      } else if (d > pick_deg) {
        pick = v;
        pick_deg = d;
      }
    });
    if (forced) {
      taken.insert(pick);
      cand -= g.adjacency(pick) | VertexSet::single(pick);
      continue;
    }
    VertexSet with = max_independent(g, cand - (g.adjacency(pick) | VertexSet::single(pick)));
    with.insert(pick);
    VertexSet without = max_independent(g, cand - VertexSet::single(pick));
    return taken | (without.size() > with.size() ? without : with);
  }
}

}  // namespace

PatternGraph::PatternGraph(Graph h) : graph_(std::move(h)) {
  if (graph_.order() < 1 || graph_.order() > 5) {
    throw DomainError("pattern graphs need 1..5 vertices, got " + std::to_string(graph_.order()));
  }
}

bool is_isolating(const Graph& g, VertexSet s) {
  VertexSet rest = g.vertices() - closed_neighborhood(g, s);
  return is_independent(g, rest);
}

Witnessed<VertexSet> isolation_number(const Graph& g) {
  HittingSetSearch search(g.order(), [&g](VertexSet s) -> std::optional<VertexSet> {
    VertexSet rest = g.vertices() - closed_neighborhood(g, s);
    std::optional<VertexSet> hit;
    rest.for_each([&](int u) {
      if (hit) return;
      VertexSet nb = g.adjacency(u) & rest;
      if (!nb.empty()) {
        int v = nb.first();
        hit = g.adjacency(u) | g.adjacency(v) | VertexSet::single(u) | VertexSet::single(v);
      }
    });
    return hit;
  });
  return search.solve();
}

std::optional<VertexSet> find_pattern(const Graph& g, const PatternGraph& pattern, VertexSet within) {
  const Graph& h = pattern.graph();
  const int k = h.order();
  within &= g.vertices();
  if (within.size() < k) return std::nullopt;

  // Map pattern vertices in a connected-first order so each new vertex is
  // constrained by already-placed neighbours.
  std::vector<int> order;
  VertexSet placed;
  while (static_cast<int>(order.size()) < k) {
    int next = -1;
    for (int v = 0; v < k && next < 0; ++v) {
      if (!placed.contains(v) && h.adjacency(v).intersects(placed)) next = v;
    }
    if (next < 0) next = (h.vertices() - placed).first();
    order.push_back(next);
    placed.insert(next);
  }

  std::vector<int> image(static_cast<std::size_t>(k), -1);
  std::function<bool(std::size_t, VertexSet)> extend = [&](std::size_t depth, VertexSet used) -> bool {
    if (depth == order.size()) return true;
    int hv = order[depth];
    VertexSet cand = within - used;
    h.adjacency(hv).for_each([&](int hu) {
      int img = image[static_cast<std::size_t>(hu)];
      if (img >= 0) cand &= g.adjacency(img);
    });
    bool ok = false;
    cand.for_each([&](int gv) {
      if (ok) return;
      image[static_cast<std::size_t>(hv)] = gv;
      ok = extend(depth + 1, used | VertexSet::single(gv));
      if (!ok) image[static_cast<std::size_t>(hv)] = -1;
    });
    return ok;
  };
  if (!extend(0, VertexSet())) return std::nullopt;
  VertexSet occurrence;
  for (int v : image) occurrence.insert(v);
  return occurrence;
}

bool contains_pattern(const Graph& g, const PatternGraph& h) {
  return find_pattern(g, h, g.vertices()).has_value();
}

bool is_pattern_isolating(const Graph& g, std::span<const PatternGraph> patterns, VertexSet s) {
  VertexSet rest = g.vertices() - closed_neighborhood(g, s);
  return std::none_of(patterns.begin(), patterns.end(),
                      [&](const PatternGraph& h) { return find_pattern(g, h, rest).has_value(); });
}

Witnessed<VertexSet> isolation_number_general(const Graph& g, std::span<const PatternGraph> patterns) {
  if (patterns.empty()) throw DomainError("F-isolation needs at least one pattern graph");
  HittingSetSearch search(g.order(), [&g, patterns](VertexSet s) -> std::optional<VertexSet> {
    VertexSet rest = g.vertices() - closed_neighborhood(g, s);
    for (const PatternGraph& h : patterns) {
      if (auto occ = find_pattern(g, h, rest)) return closed_neighborhood(g, *occ);
    }
    return std::nullopt;
  });
  return search.solve();
}

Witnessed<VertexSet> domination_number(const Graph& g) {
  HittingSetSearch search(g.order(), [&g](VertexSet s) -> std::optional<VertexSet> {
    VertexSet undominated = g.vertices() - closed_neighborhood(g, s);
    if (undominated.empty()) return std::nullopt;
    int u = undominated.first();
    return g.adjacency(u) | VertexSet::single(u);
  });
  return search.solve();
}

Witnessed<VertexSet> independence_number(const Graph& g) {
  VertexSet best = max_independent(g, g.vertices());
  const int alpha = best.size();
  auto feasible = [&](const std::vector<int>& forced, int lower) -> std::optional<std::vector<int>> {
    VertexSet f = from_members(forced);
    if (!is_independent(g, f)) return std::nullopt;
    VertexSet cand = (g.vertices() & above(lower)) - closed_neighborhood(g, f);
    VertexSet rest = max_independent(g, cand);
    if (f.size() + rest.size() < alpha) return std::nullopt;
    return (f | rest).members();
  };
  best = from_members(detail::lexicographically_smallest(best.members(), feasible));
  return {alpha, best};
}

VertexSet canonicalize_isolating_set(const MiddleGraph& mg, VertexSet s) {
  const Graph& mid = mg.graph();
  if (!s.is_subset_of(mid.vertices())) throw DomainError("set exceeds Mid(G)'s vertex range");
  if (!is_isolating(mid, s)) throw DomainError("set is not isolating in Mid(G)");
  if (s.size() != isolation_number(mid).value) throw DomainError("isolating set is not minimum");

  const int n = mg.original_count();
  while (!mg.restrict_to_original(s).empty()) {
    int vi = mg.restrict_to_original(s).first();
    // An original is adjacent in Mid(G) only to its own edge-vertices.
    VertexSet own_edges = mid.adjacency(vi);
    s.erase(vi);
    if (own_edges.empty() || own_edges.intersects(s)) continue;
    // Swap in m(i,j) for the smallest neighbour j of v_i in G.
    int best_partner = n;
    int best_vertex = -1;
    own_edges.for_each([&](int m) {
      const Edge& e = mg.source_edges()[static_cast<std::size_t>(m - n)];
      int partner = e.u == vi ? e.v : e.u;
      if (partner < best_partner) {
        best_partner = partner;
        best_vertex = m;
      }
    });
    s.insert(best_vertex);
  }
  if (!is_isolating(mid, s)) throw DomainError("canonicalisation lost the isolating property");
  return s;
}

}  // namespace midiso
