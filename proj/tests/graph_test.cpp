#include <gtest/gtest.h>

#include "midiso/enumerate.hpp"
#include "midiso/generators.hpp"
#include "midiso/graph.hpp"
#include "midiso/graph_io.hpp"

namespace midiso {
namespace {

TEST(VertexSet, BasicOperations) {
  VertexSet s = VertexSet::of({1, 3, 5});
  EXPECT_EQ(s.size(), 3);
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(2));
  EXPECT_EQ(s.first(), 1);
  EXPECT_EQ(s.members(), (std::vector<int>{1, 3, 5}));
  EXPECT_EQ((s | VertexSet::single(2)).size(), 4);
  EXPECT_EQ((s - VertexSet::single(3)), VertexSet::of({1, 5}));
  EXPECT_TRUE(VertexSet::of({1, 5}).is_subset_of(s));
  EXPECT_EQ(VertexSet::range(64).size(), 64);
}

TEST(VertexSet, LexOrderComparesSortedMembers) {
  EXPECT_TRUE(lex_less(VertexSet::of({0, 7}), VertexSet::of({1, 2})));
  EXPECT_TRUE(lex_less(VertexSet::of({1, 2}), VertexSet::of({1, 3})));
  EXPECT_TRUE(lex_less(VertexSet::of({1}), VertexSet::of({1, 2})));
  EXPECT_FALSE(lex_less(VertexSet::of({1, 2}), VertexSet::of({1, 2})));
  EXPECT_FALSE(lex_less(VertexSet::of({2}), VertexSet::of({1, 63})));
  EXPECT_TRUE(lex_less(VertexSet::of({1, 63}), VertexSet::of({2})));
  EXPECT_TRUE(lex_less(VertexSet(), VertexSet::of({0})));
}

TEST(EdgeSet, SortsDeduplicatesAndRejectsLoops) {
  EdgeSet e{Edge::make(2, 1), Edge::make(0, 1), Edge::make(1, 2)};
  ASSERT_EQ(e.size(), 2);
  EXPECT_EQ(e.edges()[0], (Edge{0, 1}));
  EXPECT_EQ(e.edges()[1], (Edge{1, 2}));
  EXPECT_EQ(e.covered(), VertexSet::of({0, 1, 2}));
  EXPECT_FALSE(e.is_vertex_disjoint());
  EXPECT_THROW(EdgeSet({Edge{3, 3}}), DomainError);
  EXPECT_THROW(Matching{e}, DomainError);
}

TEST(Graph, InvariantsHoldForEveryGenerator) {
  std::vector<Graph> gs = {path(1),   path(5),   cycle(3),          cycle(8),         complete(1),
                           complete(6), star(4), complete_bipartite(2, 3), spider_t1(4), edgeless(3),
                           leaf_corona(cycle(4)), perfect_matching_graph(3)};
  for (const Graph& g : gs) {
    int sum = 0;
    for (int v = 0; v < g.order(); ++v) {
      EXPECT_FALSE(g.adjacent(v, v));
      sum += degree(g, v);
      for (int u = 0; u < g.order(); ++u) EXPECT_EQ(g.adjacent(u, v), g.adjacent(v, u));
    }
    EXPECT_EQ(sum, 2 * g.edge_count());
  }
}

TEST(Graph, AddEdgeValidates) {
  Graph g(3);
  EXPECT_THROW(g.add_edge(1, 1), DomainError);
  EXPECT_THROW(g.add_edge(0, 3), DomainError);
  EXPECT_THROW(g.add_edge(-1, 0), DomainError);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  EXPECT_EQ(g.edge_count(), 1);
  EXPECT_THROW(Graph(65), CapacityError);
}

TEST(Graph, InducedAndPermuted) {
  Graph p = path(5);
  Graph sub = p.induced(VertexSet::of({1, 2, 4}));
  EXPECT_EQ(sub.order(), 3);
  EXPECT_EQ(sub.edge_count(), 1);
  EXPECT_TRUE(sub.adjacent(0, 1));
  std::vector<int> perm = {4, 3, 2, 1, 0};
  EXPECT_EQ(p.permuted(perm), p);
  EXPECT_EQ(complete(4).complement().edge_count(), 0);
  EXPECT_EQ(p.without_edges_at(VertexSet::single(2)).edge_count(), 2);
}

TEST(Generators, EdgeCounts) {
  EXPECT_EQ(path(5).order(), 5);
  EXPECT_EQ(path(5).edge_count(), 4);
  EXPECT_EQ(cycle(7).edge_count(), 7);
  EXPECT_EQ(complete(6).edge_count(), 15);
  EXPECT_EQ(complete_bipartite(2, 3).edge_count(), 6);
  EXPECT_EQ(star(4).edge_count(), 4);
  EXPECT_EQ(degree(star(4), 0), 4);
}

TEST(Generators, BelowMinimumIsRejected) {
  EXPECT_THROW(cycle(2), DomainError);
  EXPECT_THROW(path(0), DomainError);
  EXPECT_THROW(complete(0), DomainError);
  EXPECT_THROW(complete_bipartite(0, 3), DomainError);
  EXPECT_THROW(star(0), DomainError);
  EXPECT_THROW(spider_t1(1), DomainError);
  EXPECT_THROW(path(65), CapacityError);
}

TEST(Generators, SpiderShape) {
  EXPECT_EQ(spider_t1(2), path(5).permuted(std::vector<int>{2, 1, 0, 3, 4}));
  for (int k = 2; k <= 6; ++k) {
    Graph s = spider_t1(k);
    EXPECT_EQ(s.order(), 2 * k + 1);
    EXPECT_TRUE(is_tree(s));
    EXPECT_EQ(leaves(s).size(), k);
    int deg2 = 0;
    for (int v = 0; v < s.order(); ++v) deg2 += degree(s, v) == 2 ? 1 : 0;
    EXPECT_EQ(deg2, k == 2 ? k + 1 : k);
    EXPECT_EQ(degree(s, 0), k);
    EXPECT_EQ(diameter(s), 4);
  }
}

TEST(Queries, Degrees) {
  EXPECT_EQ(max_degree(cycle(6)), 2);
  Graph g(4, {Edge{0, 1}, Edge{1, 2}});
  EXPECT_EQ(min_degree(g), 0);
  EXPECT_TRUE(has_isolated_vertex(g));
  EXPECT_EQ(neighbors(g, 1), VertexSet::of({0, 2}));
  EXPECT_EQ(neighbors(g, 1).size(), degree(g, 1));
  EXPECT_THROW(degree(g, 4), DomainError);
  EXPECT_THROW(neighbors(g, -1), DomainError);
}

TEST(Queries, ClosedNeighborhood) {
  EXPECT_EQ(closed_neighborhood(path(5), VertexSet()), VertexSet());
  EXPECT_EQ(closed_neighborhood(complete(4), VertexSet::single(0)), VertexSet::range(4));
  EXPECT_EQ(closed_neighborhood(path(5), VertexSet::single(2)), VertexSet::of({1, 2, 3}));
  EXPECT_EQ(open_neighborhood(path(5), VertexSet::of({0, 4})), VertexSet::of({1, 3}));
}

TEST(Queries, Independence) {
  Graph c5 = cycle(5);
  EXPECT_TRUE(is_independent(c5, VertexSet()));
  EXPECT_TRUE(is_independent(c5, VertexSet::single(3)));
  EXPECT_FALSE(is_independent(c5, VertexSet::of({0, 1})));
  EXPECT_TRUE(is_independent(c5, VertexSet::of({0, 2})));
}

TEST(Queries, OddComponents) {
  EXPECT_EQ(odd_components_after_removal(path(5), VertexSet::of({1, 2})), 1);
  EXPECT_EQ(odd_components_after_removal(cycle(5), VertexSet()), 1);
  EXPECT_EQ(odd_components_after_removal(star(3), VertexSet::single(0)), 3);
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : all_connected_graphs(n)) {
      Graph h = g.without_edges_at(VertexSet::single(0)).induced(VertexSet::range(n) - VertexSet::single(0));
      auto comps = components(h);
      int even = 0;
      for (VertexSet c : comps) even += c.size() % 2 == 0 ? 1 : 0;
      EXPECT_EQ(odd_components_after_removal(h, VertexSet()) + even, static_cast<int>(comps.size()));
    }
  }
}

TEST(Queries, DistancesAndDiameter) {
  EXPECT_EQ(distance(path(5), 0, 4), 4);
  EXPECT_EQ(diameter(complete(5)), 1);
  EXPECT_EQ(diameter(spider_t1(3)), 4);
  EXPECT_EQ(diameter(edgeless(2)), std::nullopt);
  EXPECT_EQ(distance(edgeless(2), 0, 1), std::nullopt);
  EXPECT_EQ(diameter(edgeless(1)), 0);
}

TEST(Queries, TreesAndLeaves) {
  EXPECT_EQ(leaves(path(5)), VertexSet::of({0, 4}));
  EXPECT_FALSE(is_tree(cycle(4)));
  EXPECT_TRUE(is_tree(spider_t1(4)));
  EXPECT_FALSE(is_connected(edgeless(2)));
  EXPECT_FALSE(is_tree(perfect_matching_graph(2)));
}

TEST(EdgeListIo, Parses) {
  Graph p3 = parse_edge_list("3\n0 1\n1 2");
  EXPECT_EQ(p3, path(3));
  Graph k1 = parse_edge_list("1");
  EXPECT_EQ(k1.order(), 1);
  EXPECT_EQ(k1.edge_count(), 0);
  EXPECT_EQ(parse_edge_list("4\n0 1\n1 0").edge_count(), 1);
  EXPECT_EQ(parse_edge_list("# comment\n\n3\n  0 2  \n").edge_count(), 1);
  EXPECT_EQ(parse_edge_list(to_edge_list(cycle(6))), cycle(6));
}

TEST(EdgeListIo, ErrorsNameTheLine) {
  auto message = [](const char* text) {
    try {
      parse_edge_list(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_EQ(message(""), "line 1: empty input");
  EXPECT_EQ(message("3\n0 1\n2 2"), "line 3: self-loop");
  EXPECT_EQ(message("3\n0 5"), "line 2: vertex index out of range");
  EXPECT_EQ(message("3\n0 x"), "line 2: expected \"u v\"");
  EXPECT_EQ(message("abc"), "line 1: expected a vertex count");
  EXPECT_EQ(message("65"), "line 1: vertex count exceeds 64");
}

TEST(Graph6, KnownEncodings) {
  EXPECT_EQ(to_graph6(complete(3)), "Bw");
  EXPECT_EQ(to_graph6(path(5)), "DhC");
  EXPECT_EQ(parse_graph6("Bw"), complete(3));
  EXPECT_EQ(parse_graph6(">>graph6<<Bw\n"), complete(3));
  EXPECT_EQ(to_graph6(Graph(0)), "?");
}

TEST(Graph6, RoundTrip) {
  EXPECT_EQ(to_graph6(parse_graph6("D?{")), "D?{");
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : all_connected_graphs(n)) EXPECT_EQ(parse_graph6(to_graph6(g)), g);
  }
  for (int n = 1; n <= 12; ++n) {
    for (const Graph& t : all_trees(n)) EXPECT_EQ(parse_graph6(to_graph6(t)), t);
  }
  for (int n : {62, 63, 64}) {
    Graph c = cycle(n);
    EXPECT_EQ(parse_graph6(to_graph6(c)), c);
  }
}

TEST(Graph6, Rejections) {
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("   "), ParseError);
  EXPECT_THROW(parse_graph6("D?"), ParseError);
  EXPECT_THROW(parse_graph6("D?{{"), ParseError);
  EXPECT_THROW(parse_graph6("B!"), ParseError);
  EXPECT_THROW(parse_graph6("Bx"), ParseError);  // padding bit set
}

TEST(Dot, ListsVerticesAndEdges) {
  std::string dot = to_dot(path(3));
  EXPECT_NE(dot.find("graph G {"), std::string::npos);
  EXPECT_NE(dot.find("0 -- 1;"), std::string::npos);
  EXPECT_NE(dot.find("1 -- 2;"), std::string::npos);
}

}  // namespace
}  // namespace midiso
