#include <gtest/gtest.h>

#include "midiso/enumerate.hpp"
#include "midiso/generators.hpp"
#include "midiso/middle_graph.hpp"
#include "midiso/solvers.hpp"
#include "oracles.hpp"

namespace midiso {
namespace {

std::vector<Graph> small_corpus() {
  std::vector<Graph> out;
  for (int n = 1; n <= 6; ++n) {
    for (Graph& g : all_connected_graphs(n)) out.push_back(std::move(g));
  }
  out.push_back(edgeless(3));
  out.push_back(disjoint_union(path(3), complete(3)));
  out.push_back(disjoint_union(edgeless(1), cycle(4)));
  std::vector<int> orders = {7, 8};
  for (Graph& g : seeded_connected_corpus(orders, 40, 900)) out.push_back(std::move(g));
  return out;
}

TEST(Isolation, Examples) {
  EXPECT_TRUE(is_isolating(path(5), VertexSet::single(2)));
  EXPECT_TRUE(is_isolating(cycle(6), VertexSet::range(6)));
  EXPECT_FALSE(is_isolating(complete(4), VertexSet()));
  EXPECT_EQ(isolation_number(path(5)).value, 1);
  EXPECT_EQ(isolation_number(edgeless(4)).value, 0);
  EXPECT_EQ(isolation_number(edgeless(4)).witness, VertexSet());
  EXPECT_EQ(isolation_number(middle_graph(cycle(7)).graph()).value, 3);
}

TEST(Isolation, MatchesBruteForceIncludingLexSmallestWitness) {
  for (const Graph& g : small_corpus()) {
    auto got = isolation_number(g);
    auto want = oracle::isolation(g);
    ASSERT_EQ(got.value, want.value) << g.order();
    EXPECT_EQ(got.witness.bits(), want.first);
    EXPECT_TRUE(is_isolating(g, got.witness));
  }
}

TEST(Isolation, MiddleGraphsMatchBruteForce) {
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : all_connected_graphs(n)) {
      const Graph mid = middle_graph(g).graph();
      auto got = isolation_number(mid);
      auto want = oracle::isolation(mid);
      ASSERT_EQ(got.value, want.value);
      EXPECT_EQ(got.witness.bits(), want.first);
    }
  }
}

TEST(Domination, MatchesBruteForce) {
  EXPECT_EQ(domination_number(path(5)).value, 2);
  EXPECT_EQ(domination_number(edgeless(5)).value, 5);
  for (const Graph& g : small_corpus()) {
    auto got = domination_number(g);
    auto want = oracle::domination(g);
    ASSERT_EQ(got.value, want.value);
    EXPECT_EQ(got.witness.bits(), want.first);
    EXPECT_TRUE(is_dominating(g, got.witness));
    EXPECT_LE(isolation_number(g).value, got.value);
  }
}

TEST(Independence, MatchesBruteForce) {
  EXPECT_EQ(independence_number(complete(6)).value, 1);
  EXPECT_EQ(independence_number(cycle(6)).value, 3);
  EXPECT_EQ(independence_number(cycle(6)).witness, VertexSet::of({0, 2, 4}));
  for (const Graph& g : small_corpus()) {
    auto got = independence_number(g);
    ASSERT_EQ(got.value, oracle::independence(g));
    EXPECT_EQ(got.witness.size(), got.value);
    EXPECT_TRUE(is_independent(g, got.witness));
  }
}

TEST(Independence, WitnessIsLexSmallest) {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : all_connected_graphs(n)) {
      auto got = independence_number(g);
      std::uint64_t best = 0;
      bool found = false;
      oracle::any_subset_of_size(n, got.value, [&](std::uint64_t s) {
        if (oracle::independent(g, s)) {
          best = s;
          found = true;
          return true;
        }
        return false;
      });
      ASSERT_TRUE(found);
      EXPECT_EQ(got.witness.bits(), best);
    }
  }
}

TEST(Patterns, Containment) {
  const PatternGraph k2(complete(2));
  const PatternGraph k3(complete(3));
  const PatternGraph p4(path(4));
  EXPECT_FALSE(contains_pattern(edgeless(4), k2));
  EXPECT_TRUE(contains_pattern(cycle(3), k3));
  EXPECT_FALSE(contains_pattern(star(5), p4));
  EXPECT_TRUE(contains_pattern(cycle(4), p4));
  EXPECT_TRUE(contains_pattern(complete(4), PatternGraph(cycle(4))));
  EXPECT_THROW(PatternGraph(path(6)), DomainError);
  EXPECT_THROW(PatternGraph(Graph(0)), DomainError);
}

TEST(Patterns, GeneralIsolation) {
  std::vector<PatternGraph> k2 = {PatternGraph(complete(2))};
  std::vector<PatternGraph> k1 = {PatternGraph(complete(1))};
  std::vector<PatternGraph> p3 = {PatternGraph(path(3))};
  EXPECT_EQ(isolation_number_general(path(5), k2).value, 1);
  EXPECT_THROW(isolation_number_general(path(5), std::span<const PatternGraph>()), DomainError);

  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : all_connected_graphs(n)) {
      EXPECT_EQ(isolation_number_general(g, k2).value, isolation_number(g).value);
      EXPECT_EQ(isolation_number_general(g, k1).value, domination_number(g).value);
      auto got = isolation_number_general(g, p3);
      auto want = oracle::min_subset(n, [&](std::uint64_t s) {
        VertexSet rest = g.vertices() - closed_neighborhood(g, VertexSet(s));
        return !find_pattern(g, p3[0], rest).has_value();
      });
      ASSERT_EQ(got.value, want.value);
      EXPECT_TRUE(is_pattern_isolating(g, p3, got.witness));
    }
  }
  // P_5 loses every P_3 only when at most two adjacent vertices survive.
  EXPECT_EQ(isolation_number_general(path(5), p3).value, 1);
}

TEST(Canonicalize, Examples) {
  MiddleGraph p3 = middle_graph(path(3));
  VertexSet out = canonicalize_isolating_set(p3, VertexSet::single(1));
  EXPECT_EQ(out.size(), 1);
  EXPECT_TRUE(is_isolating(p3.graph(), out));
  EXPECT_FALSE(out.intersects(p3.originals()));
  EXPECT_EQ(out, VertexSet::single(3));

  VertexSet already = VertexSet::single(4);
  EXPECT_EQ(canonicalize_isolating_set(p3, already), already);

  EXPECT_THROW(canonicalize_isolating_set(p3, VertexSet()), DomainError);
  EXPECT_THROW(canonicalize_isolating_set(p3, VertexSet::of({3, 4})), DomainError);
  EXPECT_THROW(canonicalize_isolating_set(p3, VertexSet::single(9)), DomainError);
}

TEST(Canonicalize, EveryMinimumSetOfEveryTreeUpToEight) {
  for (int n = 2; n <= 8; ++n) {
    for (const Graph& t : all_trees(n)) {
      MiddleGraph mg = middle_graph(t);
      const Graph& mid = mg.graph();
      const int k = oracle::isolation(mid).value;
      oracle::any_subset_of_size(mid.order(), k, [&](std::uint64_t bits) {
        VertexSet s(bits);
        if (!is_isolating(mid, s)) return false;
        VertexSet out = canonicalize_isolating_set(mg, s);
        EXPECT_EQ(out.size(), k);
        EXPECT_TRUE(is_isolating(mid, out));
        EXPECT_FALSE(out.intersects(mg.originals()));
        return false;
      });
    }
  }
}

}  // namespace
}  // namespace midiso
