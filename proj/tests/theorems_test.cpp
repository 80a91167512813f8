#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "midiso/canonical.hpp"
#include "midiso/enumerate.hpp"
#include "midiso/generators.hpp"
#include "midiso/graph_io.hpp"
#include "midiso/theorems.hpp"
#include "oracles.hpp"

namespace midiso {
namespace {

std::int64_t value(const TheoremReport& r, const std::string& key) { return std::get<std::int64_t>(r.computed.at(key)); }

// Builds the tree given by a spine u0..ud (vertices 0..d) plus pendant K2's
// hung from the listed spine indices and single leaves on the others listed.
Graph spine_tree(int d, std::initializer_list<int> k2_at, std::initializer_list<int> leaf_at = {}) {
  const int n = d + 1 + 2 * static_cast<int>(k2_at.size()) + static_cast<int>(leaf_at.size());
  Graph t(n);
  for (int i = 0; i < d; ++i) t.add_edge(i, i + 1);
  int next = d + 1;
  for (int at : k2_at) {
    t.add_edge(at, next);
    t.add_edge(next, next + 1);
    next += 2;
  }
  for (int at : leaf_at) t.add_edge(at, next++);
  return t;
}

TEST(Formulas, ClosedForms) {
  EXPECT_EQ(formula_path(5), 2);
  EXPECT_EQ(formula_cycle(3), 1);
  EXPECT_EQ(formula_complete_bipartite(2, 3), 2);
  EXPECT_EQ(formula_complete(7), 3);
  EXPECT_THROW(formula_path(1), DomainError);
  EXPECT_THROW(formula_cycle(2), DomainError);
  EXPECT_THROW(formula_complete(0), DomainError);
  EXPECT_THROW(formula_complete_bipartite(1, 0), DomainError);
}

TEST(Formulas, CheckersPassWithDirectSearchUpToTen) {
  for (int n = 2; n <= 30; ++n) {
    auto r = check_path_formula(n);
    EXPECT_EQ(r.verdict, Verdict::kPass) << n;
    EXPECT_EQ(r.computed.count("iota_mid"), n <= 10 ? 1U : 0U);
  }
  for (int n = 3; n <= 30; ++n) EXPECT_EQ(check_cycle_formula(n).verdict, Verdict::kPass) << n;
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(check_complete_formula(n).verdict, Verdict::kPass) << n;
  for (int a = 1; a <= 5; ++a) {
    for (int b = 1; b <= 5; ++b) EXPECT_EQ(check_complete_bipartite_formula(a, b).verdict, Verdict::kPass);
  }
}

TEST(MainTheorem, Examples) {
  auto p5 = verify_main_theorem(path(5));
  EXPECT_EQ(p5.verdict, Verdict::kPass);
  EXPECT_EQ(value(p5, "iota_mid"), 2);
  EXPECT_EQ(value(p5, "nu_prime"), 2);
  EXPECT_EQ(p5.graph6, "DhC");
  EXPECT_EQ(p5.witnesses.count("isolating_set"), 1U);
  EXPECT_EQ(p5.witnesses.count("min_maximal_matching"), 1U);

  auto s7 = verify_main_theorem(star(7));
  EXPECT_EQ(s7.verdict, Verdict::kPass);
  EXPECT_EQ(value(s7, "iota_mid"), 1);

  auto big = verify_main_theorem(complete(11));
  EXPECT_EQ(big.verdict, Verdict::kNotApplicable);
  EXPECT_FALSE(big.counterexample.has_value());
}

TEST(MainTheorem, ChainOnSmallGraphs) {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : all_connected_graphs(n)) {
      EXPECT_EQ(verify_main_theorem(g).verdict, Verdict::kPass);
      auto chain = verify_tau_chain(g);
      EXPECT_EQ(chain.verdict, Verdict::kPass);
      EXPECT_EQ(value(chain, "tau"), oracle::tau(g).value);
    }
  }
}

TEST(Bounds, KbipAndEdgeless) {
  auto kkk = check_bounds(complete_bipartite(3, 3));
  ASSERT_EQ(kkk.size(), 6U);
  for (const auto& r : kkk) EXPECT_EQ(r.verdict, Verdict::kPass) << r.claim_id;

  auto empty = check_bounds(edgeless(4));
  auto verdict_of = [&](std::string_view id) {
    auto it = std::find_if(empty.begin(), empty.end(), [&](const TheoremReport& r) { return r.claim_id == id; });
    return it->verdict;
  };
  EXPECT_EQ(verdict_of(claims::kBoundHalfDomination), Verdict::kNotApplicable);
  EXPECT_EQ(verdict_of(claims::kBoundEdgesOverDegree), Verdict::kNotApplicable);
  EXPECT_EQ(verdict_of(claims::kBoundIsolation), Verdict::kPass);
  EXPECT_EQ(verdict_of(claims::kBoundHalfOrder), Verdict::kPass);

  auto with_isolated = check_bounds(disjoint_union(path(3), edgeless(1)));
  EXPECT_EQ(with_isolated[0].verdict, Verdict::kNotApplicable);
  EXPECT_EQ(std::get<std::string>(with_isolated[0].computed.at("reason")), "graph has an isolated vertex");
}

TEST(Sharpness, DegreeTimesIsolation) {
  for (int k = 1; k <= 4; ++k) {
    auto r = check_degree_isolation_sharpness(k);
    EXPECT_EQ(r.verdict, Verdict::kPass);
    EXPECT_EQ(value(r, "iota_mid"), k);
  }
}

TEST(Sharpness, HalfDominationLeafCorona) {
  for (int k = 2; k <= 3; ++k) {
    for (const Graph& h : {perfect_matching_graph(k), complete(2 * k), cycle(2 * k)}) {
      auto r = check_half_domination_sharpness(h);
      EXPECT_EQ(r.verdict, Verdict::kPass);
      EXPECT_EQ(value(r, "iota_mid"), k);
      EXPECT_EQ(value(r, "gamma"), 2 * k);
    }
  }
  EXPECT_THROW(check_half_domination_sharpness(path(3)), DomainError);
}

TEST(HalfEquality, Examples) {
  auto k33 = classify_half_equality(complete_bipartite(3, 3));
  EXPECT_EQ(k33.verdict, Verdict::kPass);
  EXPECT_TRUE(std::get<bool>(k33.computed.at("equality")));
  EXPECT_TRUE(std::get<bool>(k33.computed.at("is_balanced_complete_bipartite")));

  auto p6 = classify_half_equality(path(6));
  EXPECT_EQ(p6.verdict, Verdict::kPass);
  EXPECT_EQ(value(p6, "nu_prime"), 2);
  EXPECT_FALSE(std::get<bool>(p6.computed.at("characterization")));

  auto c5 = classify_half_equality(cycle(5));
  EXPECT_EQ(c5.verdict, Verdict::kPass);
  EXPECT_TRUE(std::get<bool>(c5.computed.at("all_maximal_matchings_near_perfect")));

  EXPECT_EQ(classify_half_equality(edgeless(2)).verdict, Verdict::kNotApplicable);
  EXPECT_EQ(classify_half_equality(complete(8)).verdict, Verdict::kPass);
  EXPECT_EQ(classify_half_equality(complete_bipartite(4, 4)).verdict, Verdict::kPass);
}

TEST(Trees, UpperBoundExamples) {
  for (int k = 2; k <= 4; ++k) {
    auto r = tree_upper_bound(spider_t1(k));
    EXPECT_EQ(r.verdict, Verdict::kPass);
    EXPECT_EQ(value(r, "nu_prime"), k);
  }
  auto p8 = tree_upper_bound(path(8));
  EXPECT_EQ(p8.verdict, Verdict::kPass);
  EXPECT_EQ(value(p8, "nu_prime"), 3);
  EXPECT_EQ(tree_upper_bound(cycle(5)).verdict, Verdict::kNotApplicable);
  EXPECT_EQ(tree_upper_bound(path(2)).verdict, Verdict::kNotApplicable);
}

TEST(Trees, OracleExamples) {
  EXPECT_TRUE(is_extremal_tree_oracle(path(4)));
  EXPECT_TRUE(is_extremal_tree_oracle(star(3)));
  EXPECT_FALSE(is_extremal_tree_oracle(path(7)));
  EXPECT_TRUE(is_extremal_tree_oracle(path(6)));
  EXPECT_THROW(is_extremal_tree_oracle(cycle(4)), DomainError);
  EXPECT_THROW(is_extremal_tree_oracle(path(2)), DomainError);
}

TEST(Trees, RecognizerExamples) {
  EXPECT_EQ(recognize_extremal_tree(path(3)), ExtremalTreeClass::kP3);
  EXPECT_EQ(recognize_extremal_tree(path(4)), ExtremalTreeClass::kP4);
  EXPECT_EQ(recognize_extremal_tree(star(3)), ExtremalTreeClass::kK13);
  EXPECT_EQ(recognize_extremal_tree(spider_t1(3)), ExtremalTreeClass::kSpider);
  EXPECT_EQ(recognize_extremal_tree(path(5)), ExtremalTreeClass::kSpider);
  EXPECT_EQ(recognize_extremal_tree(path(6)), ExtremalTreeClass::kDiameter5);
  EXPECT_EQ(recognize_extremal_tree(path(7)), ExtremalTreeClass::kNone);
  EXPECT_EQ(recognize_extremal_tree(star(5)), ExtremalTreeClass::kNone);
  EXPECT_THROW(recognize_extremal_tree(cycle(5)), DomainError);

  // Spider on three legs plus one leaf somewhere.
  Graph plus_leaf(8, {Edge{0, 1}, Edge{1, 2}, Edge{0, 3}, Edge{3, 4}, Edge{0, 5}, Edge{5, 6}, Edge{0, 7}});
  EXPECT_EQ(recognize_extremal_tree(plus_leaf), ExtremalTreeClass::kSpiderPlusLeaf);
  EXPECT_TRUE(is_extremal_tree_oracle(plus_leaf));

  EXPECT_EQ(recognize_extremal_tree(spine_tree(5, {2, 3})), ExtremalTreeClass::kDiameter5);
  EXPECT_EQ(recognize_extremal_tree(spine_tree(6, {2, 4}, {3})), ExtremalTreeClass::kDiameter6);
  EXPECT_EQ(recognize_extremal_tree(spine_tree(6, {}, {3})), ExtremalTreeClass::kDiameter6);
  EXPECT_EQ(recognize_extremal_tree(spine_tree(7, {2, 5, 5})), ExtremalTreeClass::kDiameter7);
  EXPECT_EQ(recognize_extremal_tree(spine_tree(7, {})), ExtremalTreeClass::kDiameter7);
  EXPECT_EQ(recognize_extremal_tree(spine_tree(7, {3})), ExtremalTreeClass::kNone);
  EXPECT_EQ(to_string(ExtremalTreeClass::kSpider), "T1-family");
}

TEST(Trees, RecognizerMatchesOracleOnEveryTreeUpToTwelve) {
  std::vector<int> extremal_counts;
  for (int n = 3; n <= 12; ++n) {
    int count = 0;
    for (const Graph& t : all_trees(n)) {
      auto r = check_extremal_tree(t);
      ASSERT_EQ(r.verdict, Verdict::kPass) << to_graph6(t);
      const bool oracle_says = std::get<bool>(r.computed.at("oracle_extremal"));
      // The matching-number oracle in tests agrees with the library oracle.
      if (n <= 9) ASSERT_EQ(oracle_says, oracle::min_maximal_matching(t).value == (n - 1) / 2);
      count += oracle_says ? 1 : 0;
      EXPECT_EQ(tree_upper_bound(t).verdict, Verdict::kPass);
    }
    extremal_counts.push_back(count);
  }
  EXPECT_EQ(extremal_counts, (std::vector<int>{1, 2, 1, 3, 1, 5, 1, 6, 1, 8}));
}

TEST(Trees, ConditionsOnExtremalTrees) {
  auto spider = extremal_tree_conditions(spider_t1(3));
  EXPECT_EQ(spider.status[0], ConditionStatus::kHolds);
  EXPECT_EQ(spider.status[1], ConditionStatus::kHolds);
  EXPECT_EQ(spider.status[2], ConditionStatus::kHolds);
  EXPECT_EQ(spider.status[3], ConditionStatus::kNotApplicable);

  auto p5 = extremal_tree_conditions(path(5));
  EXPECT_EQ(p5.status[2], ConditionStatus::kHolds);

  EXPECT_THROW(extremal_tree_conditions(path(7)), DomainError);
  EXPECT_EQ(check_extremal_tree_conditions(path(7)).verdict, Verdict::kNotApplicable);

  for (int n = 3; n <= 12; ++n) {
    for (const Graph& t : all_trees(n)) {
      auto r = check_extremal_tree_conditions(t);
      EXPECT_NE(r.verdict, Verdict::kFail) << to_graph6(t);
    }
  }
}

TEST(RandomlyMatchable, Examples) {
  EXPECT_EQ(check_randomly_matchable(complete(6)).verdict, Verdict::kPass);
  auto c6 = check_randomly_matchable(cycle(6));
  EXPECT_EQ(c6.verdict, Verdict::kPass);
  EXPECT_FALSE(std::get<bool>(c6.computed.at("randomly_matchable")));
  EXPECT_EQ(check_randomly_matchable(cycle(5)).verdict, Verdict::kNotApplicable);
  EXPECT_EQ(check_randomly_matchable(perfect_matching_graph(2)).verdict, Verdict::kNotApplicable);
}

TEST(Procedures, CheckersPassOnSmallGraphs) {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : all_connected_graphs(n)) {
      auto a = check_isolating_canonicalization(g);
      EXPECT_EQ(a.verdict, Verdict::kPass);
      EXPECT_GE(value(a, "minimum_isolating_sets"), 1);
      auto b = check_theta_procedure(g);
      EXPECT_EQ(b.verdict, Verdict::kPass);
      EXPECT_GE(value(b, "minimum_theta_sets"), 1);
    }
  }
}

TEST(Reports, FailuresCarryARevalidatingCounterexample) {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : all_connected_graphs(n)) {
      std::vector<TheoremReport> rs = check_bounds(g);
      rs.push_back(verify_main_theorem(g));
      rs.push_back(classify_half_equality(g));
      for (const auto& r : rs) {
        EXPECT_EQ(r.verdict == Verdict::kFail, r.counterexample.has_value());
        if (r.counterexample) EXPECT_TRUE(violation_confirmed(*r.counterexample));
      }
    }
  }
}

TEST(Claims, IdentifiersAreUnique) {
  auto ids = claims::all();
  std::set<std::string_view> unique(ids.begin(), ids.end());
  EXPECT_EQ(unique.size(), ids.size());
  EXPECT_EQ(ids.size(), 21U);
}

}  // namespace
}  // namespace midiso
