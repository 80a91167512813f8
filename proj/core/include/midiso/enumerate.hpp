#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "midiso/graph.hpp"

namespace midiso {

inline constexpr int kMaxTreeOrder = 12;
inline constexpr int kMaxConnectedOrder = 6;
/// Reachable only with allow_long_run; about two million edge masks.
inline constexpr int kLongConnectedOrder = 7;

/// One tree per isomorphism class on n vertices, 1 <= n <= 12. Built by
/// hanging a leaf on every vertex of every (n-1)-vertex tree and keeping the
/// first member of each canonical class.
std::vector<Graph> all_trees(int n);

/// One connected graph per isomorphism class on n vertices, 1 <= n <= 6 (7
/// with allow_long_run). Sweeps every edge mask in increasing order.
std::vector<Graph> all_connected_graphs(int n, bool allow_long_run = false);

/// Deterministic random source shared by every generator below.
///
/// The engine is std::mt19937_64 seeded with the given value, whose output
/// sequence is fixed by the C++ standard. Bounded integers use rejection on
/// raw 64-bit draws: with limit = 2^64 - (2^64 mod bound), a draw x is
/// accepted when x < limit and mapped to x mod bound. A Bernoulli(p) trial
/// takes the top 53 bits of one draw as u in [0,1) and succeeds when u < p.
class SeededRandom {
 public:
  explicit SeededRandom(std::uint64_t seed);
  std::uint64_t next();
  std::uint64_t below(std::uint64_t bound);
  bool bernoulli(double p);

 private:
  std::mt19937_64 engine_;
};

/// Uniform over labelled trees, via a random Prufer sequence. 1 <= n <= 16.
Graph random_tree(int n, std::uint64_t seed);

/// G(n, p) draws (edges in lexicographic order) resampled until connected;
/// GenerationError after 10000 attempts. 1 <= n <= 16, 0 < p <= 1.
Graph random_connected_graph(int n, double edge_probability, std::uint64_t seed);

/// `count` connected graphs; graph i has order orders[i % orders.size()],
/// edge probability 0.3, 0.5 or 0.7 cycling with i / orders.size(), and seed
/// base_seed + i.
std::vector<Graph> seeded_connected_corpus(std::span<const int> orders, int count, std::uint64_t base_seed);

}  // namespace midiso
