#include "midiso/enumerate.hpp"

#include <limits>
#include <set>
#include <string>

#include "midiso/canonical.hpp"

namespace midiso {

std::vector<Graph> all_trees(int n) {
  if (n < 1 || n > kMaxTreeOrder) {
    throw DomainError("all_trees supports 1 <= n <= 12, got " + std::to_string(n));
  }
  std::vector<Graph> level{Graph(1)};
  for (int order = 2; order <= n; ++order) {
    std::vector<Graph> next;
    std::set<CanonicalForm> seen;
    for (const Graph& t : level) {
      for (int v = 0; v < order - 1; ++v) {
        Graph grown(order, t.edges());
        grown.add_edge(v, order - 1);
        if (seen.insert(canonical_form(grown)).second) next.push_back(std::move(grown));
      }
    }
    level = std::move(next);
  }
  return level;
}

std::vector<Graph> all_connected_graphs(int n, bool allow_long_run) {
  const int cap = allow_long_run ? kLongConnectedOrder : kMaxConnectedOrder;
  if (n < 1 || n > cap) {
    throw DomainError("all_connected_graphs supports 1 <= n <= " + std::to_string(cap) + ", got " +
                      std::to_string(n));
  }
  const std::vector<Edge> slots = Graph(n).complement().edges();
  const std::uint64_t masks = std::uint64_t{1} << slots.size();
  std::vector<Graph> out;
  std::set<CanonicalForm> seen;
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    if (std::popcount(mask) < n - 1) continue;
    Graph g(n);
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if ((mask >> i) & 1U) g.add_edge(slots[i].u, slots[i].v);
    }
    if (!is_connected(g)) continue;
    if (seen.insert(canonical_form(g)).second) out.push_back(g);
  }
  return out;
}

SeededRandom::SeededRandom(std::uint64_t seed) : engine_(seed) {}

std::uint64_t SeededRandom::next() { return engine_(); }

std::uint64_t SeededRandom::below(std::uint64_t bound) {
  if (bound == 0) throw DomainError("bound must be positive");
  // 2^64 mod bound, computed without overflow.
  const std::uint64_t excess = (std::numeric_limits<std::uint64_t>::max() % bound + 1) % bound;
  const std::uint64_t limit = excess == 0 ? 0 : std::numeric_limits<std::uint64_t>::max() - excess + 1;
  while (true) {
    std::uint64_t x = next();
    if (limit == 0 || x < limit) return x % bound;
  }
}

bool SeededRandom::bernoulli(double p) {
  const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
  return u < p;
}

Graph random_tree(int n, std::uint64_t seed) {
  if (n < 1 || n > 16) throw DomainError("random_tree supports 1 <= n <= 16");
  Graph t(n);
  if (n == 1) return t;
  if (n == 2) {
    t.add_edge(0, 1);
    return t;
  }
  SeededRandom rng(seed);
  std::vector<int> code(static_cast<std::size_t>(n - 2));
  for (int& c : code) c = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));

  std::vector<int> deg(static_cast<std::size_t>(n), 1);
  for (int c : code) ++deg[static_cast<std::size_t>(c)];
  for (int c : code) {
    int leaf = 0;
    while (deg[static_cast<std::size_t>(leaf)] != 1) ++leaf;
    t.add_edge(leaf, c);
    --deg[static_cast<std::size_t>(leaf)];
    --deg[static_cast<std::size_t>(c)];
  }
  int a = -1;
  for (int v = 0; v < n; ++v) {
    if (deg[static_cast<std::size_t>(v)] == 1) {
      if (a < 0) {
        a = v;
      } else {
        t.add_edge(a, v);
        break;
      }
    }
  }
  return t;
}

Graph random_connected_graph(int n, double edge_probability, std::uint64_t seed) {
  if (n < 1 || n > 16) throw DomainError("random_connected_graph supports 1 <= n <= 16");
  if (!(edge_probability > 0.0 && edge_probability <= 1.0)) {
    throw DomainError("edge probability must lie in (0, 1]");
  }
  constexpr int kAttempts = 10000;
  SeededRandom rng(seed);
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    Graph g(n);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (rng.bernoulli(edge_probability)) g.add_edge(u, v);
      }
    }
    if (is_connected(g)) return g;
  }
  throw GenerationError("no connected graph after " + std::to_string(kAttempts) + " draws");
}

std::vector<Graph> seeded_connected_corpus(std::span<const int> orders, int count, std::uint64_t base_seed) {
  if (orders.empty()) throw DomainError("corpus needs at least one order");
  constexpr double kProbabilities[] = {0.3, 0.5, 0.7};
  std::vector<Graph> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    const int n = orders[k % orders.size()];
    const double p = kProbabilities[(k / orders.size()) % 3];
    out.push_back(random_connected_graph(n, p, base_seed + k));
  }
  return out;
}

}  // namespace midiso
