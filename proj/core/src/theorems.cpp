#include "midiso/theorems.hpp"

#include <algorithm>
#include <string>

#include "midiso/canonical.hpp"
#include "midiso/generators.hpp"
#include "midiso/graph_io.hpp"
#include "midiso/middle_graph.hpp"
#include "midiso/solvers.hpp"

namespace midiso {

namespace claims {
std::vector<std::string_view> all() {
  return {kMainTheorem,
          kTauChain,
          kBoundHalfDomination,
          kBoundIsolation,
          kBoundDegreeTimesIsolation,
          kBoundEdgesOverDegree,
          kBoundOrderMinusIndependence,
          kBoundHalfOrder,
          kFormulaPath,
          kFormulaCycle,
          kFormulaComplete,
          kFormulaCompleteBipartite,
          kSharpDegreeTimesIsolation,
          kSharpHalfDomination,
          kHalfOrderEquality,
          kTreeUpperBound,
          kExtremalTrees,
          kExtremalTreeConditions,
          kRandomlyMatchable,
          kIsolatingCanonicalization,
          kThetaProcedure};
}
}  // namespace claims

namespace {

TheoremReport start(std::string_view claim, const Graph& g) {
  TheoremReport r;
  r.claim_id = std::string(claim);
  r.graph6 = to_graph6(g);
  r.computed["n"] = std::int64_t{g.order()};
  r.computed["edges"] = std::int64_t{g.edge_count()};
  return r;
}

TheoremReport not_applicable(TheoremReport r, std::string reason) {
  r.verdict = Verdict::kNotApplicable;
  r.computed["reason"] = std::move(reason);
  return r;
}

// Sets the verdict from `lhs relation rhs`; a failing comparison records the
// raw values as the counterexample.
void judge(TheoremReport& r, std::string lhs_name, std::int64_t lhs, std::string relation, std::string rhs_name,
           std::int64_t rhs, std::string detail = {}) {
  Counterexample c{std::move(lhs_name), lhs, std::move(relation), std::move(rhs_name), rhs, std::move(detail)};
  if (violation_confirmed(c)) {
    r.verdict = Verdict::kFail;
    r.counterexample = std::move(c);
  } else {
    r.verdict = Verdict::kPass;
  }
}

std::int64_t as_int(bool b) { return b ? 1 : 0; }

// Visits every k-subset of the low `width` bits in increasing numeric order.
template <class F>
void for_each_subset_of_size(int width, int k, F&& visit) {
  if (k > width) return;
  if (k == 0) {
    visit(std::uint64_t{0});
    return;
  }
  const std::uint64_t limit = width >= 64 ? 0 : std::uint64_t{1} << width;
  std::uint64_t x = (k >= 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  while (true) {
    if (!visit(x)) return;
    const std::uint64_t c = x & (~x + 1);
    const std::uint64_t r = x + c;
    if (r == 0) return;
    x = (((r ^ x) >> 2) / c) | r;
    if (limit != 0 && x >= limit) return;
  }
}

EdgeSet edges_from_mask(const std::vector<Edge>& all_edges, std::uint64_t mask) {
  std::vector<Edge> chosen;
  for (std::uint64_t b = mask; b != 0; b &= b - 1) chosen.push_back(all_edges[static_cast<std::size_t>(std::countr_zero(b))]);
  return EdgeSet(std::move(chosen));
}

TheoremReport check_formula(std::string_view claim, const Graph& g, int closed_form, int direct_limit) {
  TheoremReport r = start(claim, g);
  auto nu_prime = min_maximal_matching(g);
  r.computed["formula"] = std::int64_t{closed_form};
  r.computed["nu_prime"] = std::int64_t{nu_prime.value};
  r.witnesses["min_maximal_matching"] = nu_prime.witness.edges();
  judge(r, "nu_prime", nu_prime.value, "==", "formula", closed_form);
  if (r.verdict == Verdict::kPass && g.order() <= direct_limit) {
    MiddleGraph mg = middle_graph(g);
    auto iota = isolation_number(mg.graph());
    r.computed["iota_mid"] = std::int64_t{iota.value};
    r.witnesses["isolating_set"] = iota.witness;
    judge(r, "iota_mid", iota.value, "==", "formula", closed_form);
  }
  return r;
}

bool is_spider(const Graph& t, int legs) { return legs >= 2 && is_isomorphic(t, spider_t1(legs)); }

// Vertices of the BFS path from a to b, a first.
std::vector<int> tree_path(const Graph& t, int a, int b) {
  auto dist = distances_from(t, b);
  std::vector<int> out{a};
  int at = a;
  while (at != b) {
    int step = -1;
    t.adjacency(at).for_each([&](int w) {
      if (step < 0 && dist[static_cast<std::size_t>(w)] == *dist[static_cast<std::size_t>(at)] - 1) step = w;
    });
    at = step;
    out.push_back(at);
  }
  return out;
}

// T is the spine u0..ud plus components hanging off it, each either a K2
// joined by one end to a spine index in `k2_at`, or (when `single_leaf_at`
// >= 0) exactly one extra leaf on that spine index.
bool matches_spine_family(const Graph& t, const std::vector<int>& spine, std::initializer_list<int> k2_at,
                          int single_leaf_at) {
  VertexSet on_spine;
  for (int v : spine) on_spine.insert(v);
  int singles = 0;
  for (VertexSet comp : components(t, t.vertices() - on_spine)) {
    VertexSet attach = open_neighborhood(t, comp) & on_spine;
    if (attach.size() != 1) return false;
    const int index = static_cast<int>(std::find(spine.begin(), spine.end(), attach.first()) - spine.begin());
    if (comp.size() == 2) {
      if (std::find(k2_at.begin(), k2_at.end(), index) == k2_at.end()) return false;
    } else if (comp.size() == 1 && index == single_leaf_at) {
      ++singles;
    } else {
      return false;
    }
  }
  return single_leaf_at < 0 || singles == 1;
}

void require_tree(const Graph& t) {
  if (!is_tree(t) || t.order() < 3) throw DomainError("expected a tree on at least 3 vertices");
}

}  // namespace

int formula_path(int n) {
  if (n < 2) throw DomainError("path formula needs n >= 2");
  return (n + 1) / 3;
}

int formula_cycle(int n) {
  if (n < 3) throw DomainError("cycle formula needs n >= 3");
  return (n + 2) / 3;
}

int formula_complete(int n) {
  if (n < 1) throw DomainError("complete-graph formula needs n >= 1");
  return n / 2;
}

int formula_complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw DomainError("complete-bipartite formula needs a, b >= 1");
  return std::min(a, b);
}

TheoremReport verify_main_theorem(const Graph& g) {
  TheoremReport r = start(claims::kMainTheorem, g);
  std::optional<MiddleGraph> mg;
  try {
    mg.emplace(middle_graph(g));
  } catch (const CapacityError& e) {
    return not_applicable(std::move(r), e.what());
  }
  auto iota = isolation_number(mg->graph());
  auto nu_prime = min_maximal_matching(g);
  r.computed["iota_mid"] = std::int64_t{iota.value};
  r.computed["nu_prime"] = std::int64_t{nu_prime.value};
  r.witnesses["isolating_set"] = iota.witness;
  r.witnesses["min_maximal_matching"] = nu_prime.witness.edges();
  judge(r, "iota_mid", iota.value, "==", "nu_prime", nu_prime.value);
  return r;
}

TheoremReport verify_tau_chain(const Graph& g) {
  TheoremReport r = start(claims::kTauChain, g);
  std::optional<MiddleGraph> mg;
  try {
    mg.emplace(middle_graph(g));
  } catch (const CapacityError& e) {
    return not_applicable(std::move(r), e.what());
  }
  auto iota = isolation_number(mg->graph());
  auto t = tau(g);
  std::optional<Matching> smallest;
  for_each_maximal_matching(g, [&](const Matching& m) {
    if (!smallest || m.size() < smallest->size()) smallest = m;
    return true;
  });
  r.computed["iota_mid"] = std::int64_t{iota.value};
  r.computed["tau"] = std::int64_t{t.value};
  r.computed["min_enumerated_maximal_matching"] = std::int64_t{smallest->size()};
  r.witnesses["isolating_set"] = iota.witness;
  r.witnesses["theta_set"] = t.witness;
  r.witnesses["enumerated_matching"] = smallest->edges();
  judge(r, "iota_mid", iota.value, "==", "tau", t.value);
  if (r.verdict == Verdict::kPass) judge(r, "tau", t.value, "==", "min_enumerated_maximal_matching", smallest->size());
  return r;
}

std::vector<TheoremReport> check_bounds(const Graph& g) {
  const std::vector<std::string_view> ids = {claims::kBoundHalfDomination,        claims::kBoundIsolation,
                                             claims::kBoundDegreeTimesIsolation,  claims::kBoundEdgesOverDegree,
                                             claims::kBoundOrderMinusIndependence, claims::kBoundHalfOrder};
  std::vector<TheoremReport> out;
  std::optional<MiddleGraph> mg;
  try {
    mg.emplace(middle_graph(g));
  } catch (const CapacityError& e) {
    for (auto id : ids) out.push_back(not_applicable(start(id, g), e.what()));
    return out;
  }

  const auto iota_mid = isolation_number(mg->graph());
  const auto gamma = domination_number(g);
  const auto iota = isolation_number(g);
  const auto alpha = independence_number(g);
  const auto t = tau(g);
  const int delta = max_degree(g);
  const int n = g.order();
  const int m = g.edge_count();

  auto with_common = [&](std::string_view id) {
    TheoremReport r = start(id, g);
    r.computed["iota_mid"] = std::int64_t{iota_mid.value};
    r.witnesses["isolating_set"] = iota_mid.witness;
    return r;
  };

  {
    TheoremReport r = with_common(claims::kBoundHalfDomination);
    r.computed["gamma"] = std::int64_t{gamma.value};
    r.witnesses["dominating_set"] = gamma.witness;
    if (has_isolated_vertex(g)) {
      r = not_applicable(std::move(r), "graph has an isolated vertex");
    } else {
      judge(r, "2*iota_mid", 2 * std::int64_t{iota_mid.value}, ">=", "gamma", gamma.value);
    }
    out.push_back(std::move(r));
  }
  {
    TheoremReport r = with_common(claims::kBoundIsolation);
    r.computed["iota"] = std::int64_t{iota.value};
    r.witnesses["graph_isolating_set"] = iota.witness;
    judge(r, "iota_mid", iota_mid.value, ">=", "iota", iota.value);
    out.push_back(std::move(r));
  }
  {
    TheoremReport r = with_common(claims::kBoundDegreeTimesIsolation);
    r.computed["iota"] = std::int64_t{iota.value};
    r.computed["max_degree"] = std::int64_t{delta};
    r.witnesses["graph_isolating_set"] = iota.witness;
    judge(r, "iota_mid", iota_mid.value, "<=", "max_degree*iota", std::int64_t{delta} * iota.value);
    out.push_back(std::move(r));
  }
  {
    TheoremReport r = with_common(claims::kBoundEdgesOverDegree);
    r.computed["max_degree"] = std::int64_t{delta};
    if (delta == 0) {
      r = not_applicable(std::move(r), "maximum degree is 0");
    } else {
      judge(r, "iota_mid*(2*max_degree-1)", std::int64_t{iota_mid.value} * (2 * delta - 1), ">=", "edges", m);
    }
    out.push_back(std::move(r));
  }
  {
    TheoremReport r = start(claims::kBoundOrderMinusIndependence, g);
    r.computed["tau"] = std::int64_t{t.value};
    r.computed["alpha"] = std::int64_t{alpha.value};
    r.witnesses["theta_set"] = t.witness;
    r.witnesses["independent_set"] = alpha.witness;
    judge(r, "tau", t.value, "<=", "n-alpha", n - alpha.value);
    out.push_back(std::move(r));
  }
  {
    TheoremReport r = with_common(claims::kBoundHalfOrder);
    judge(r, "iota_mid", iota_mid.value, "<=", "floor(n/2)", n / 2);
    out.push_back(std::move(r));
  }
  return out;
}

TheoremReport check_path_formula(int n, int direct_limit) {
  return check_formula(claims::kFormulaPath, path(n), formula_path(n), direct_limit);
}

TheoremReport check_cycle_formula(int n, int direct_limit) {
  return check_formula(claims::kFormulaCycle, cycle(n), formula_cycle(n), direct_limit);
}

TheoremReport check_complete_formula(int n, int direct_limit) {
  return check_formula(claims::kFormulaComplete, complete(n), formula_complete(n), direct_limit);
}

TheoremReport check_complete_bipartite_formula(int a, int b, int direct_limit) {
  return check_formula(claims::kFormulaCompleteBipartite, complete_bipartite(a, b), formula_complete_bipartite(a, b),
                       direct_limit);
}

TheoremReport check_degree_isolation_sharpness(int k) {
  const Graph g = complete_bipartite(k, k);
  TheoremReport r = start(claims::kSharpDegreeTimesIsolation, g);
  MiddleGraph mg = middle_graph(g);
  auto iota_mid = isolation_number(mg.graph());
  auto iota = isolation_number(g);
  const int delta = max_degree(g);
  r.computed["iota_mid"] = std::int64_t{iota_mid.value};
  r.computed["iota"] = std::int64_t{iota.value};
  r.computed["max_degree"] = std::int64_t{delta};
  r.witnesses["isolating_set"] = iota_mid.witness;
  r.witnesses["graph_isolating_set"] = iota.witness;
  judge(r, "iota_mid", iota_mid.value, "==", "max_degree*iota", std::int64_t{delta} * iota.value);
  return r;
}

TheoremReport check_half_domination_sharpness(const Graph& h) {
  if (!is_perfect(h, maximum_matching(h).witness)) throw DomainError("base graph needs a perfect matching");
  const Graph g = leaf_corona(h);
  TheoremReport r = start(claims::kSharpHalfDomination, g);
  MiddleGraph mg = middle_graph(g);
  auto iota_mid = isolation_number(mg.graph());
  auto gamma = domination_number(g);
  r.computed["iota_mid"] = std::int64_t{iota_mid.value};
  r.computed["gamma"] = std::int64_t{gamma.value};
  r.witnesses["isolating_set"] = iota_mid.witness;
  r.witnesses["dominating_set"] = gamma.witness;
  judge(r, "2*iota_mid", 2 * std::int64_t{iota_mid.value}, "==", "gamma", gamma.value);
  return r;
}

TheoremReport classify_half_equality(const Graph& g) {
  TheoremReport r = start(claims::kHalfOrderEquality, g);
  const int n = g.order();
  if (n == 0 || !is_connected(g)) return not_applicable(std::move(r), "graph is not connected");

  auto nu_prime = min_maximal_matching(g);
  const bool equality = nu_prime.value == n / 2;
  bool structure = false;
  if (n % 2 == 0) {
    const bool is_kn = is_isomorphic(g, complete(n));
    const bool is_kbip = is_isomorphic(g, complete_bipartite(n / 2, n / 2));
    r.computed["is_complete"] = is_kn;
    r.computed["is_balanced_complete_bipartite"] = is_kbip;
    structure = is_kn || is_kbip;
  } else {
    structure = true;
    for_each_maximal_matching(g, [&](const Matching& m) {
      if (!is_near_perfect(g, m)) {
        structure = false;
        r.witnesses["non_near_perfect_maximal_matching"] = m.edges();
      }
      return structure;
    });
    r.computed["all_maximal_matchings_near_perfect"] = structure;
  }
  r.computed["nu_prime"] = std::int64_t{nu_prime.value};
  r.computed["equality"] = equality;
  r.computed["characterization"] = structure;
  r.witnesses["min_maximal_matching"] = nu_prime.witness.edges();
  judge(r, "equality", as_int(equality), "==", "characterization", as_int(structure));
  return r;
}

TheoremReport tree_upper_bound(const Graph& t) {
  TheoremReport r = start(claims::kTreeUpperBound, t);
  if (!is_tree(t) || t.order() < 3) return not_applicable(std::move(r), "not a tree on at least 3 vertices");
  auto nu_prime = min_maximal_matching(t);
  r.computed["nu_prime"] = std::int64_t{nu_prime.value};
  r.witnesses["min_maximal_matching"] = nu_prime.witness.edges();
  judge(r, "nu_prime", nu_prime.value, "<=", "floor((n-1)/2)", (t.order() - 1) / 2);
  return r;
}

bool is_extremal_tree_oracle(const Graph& t) {
  require_tree(t);
  return min_maximal_matching(t).value == (t.order() - 1) / 2;
}

std::string_view to_string(ExtremalTreeClass c) {
  switch (c) {
    case ExtremalTreeClass::kP3:
      return "P3";
    case ExtremalTreeClass::kP4:
      return "P4";
    case ExtremalTreeClass::kK13:
      return "K13";
    case ExtremalTreeClass::kSpider:
      return "T1-family";
    case ExtremalTreeClass::kSpiderPlusLeaf:
      return "T1-plus-leaf";
    case ExtremalTreeClass::kDiameter5:
      return "diam5-family";
    case ExtremalTreeClass::kDiameter6:
      return "diam6-family";
    case ExtremalTreeClass::kDiameter7:
      return "diam7-family";
    case ExtremalTreeClass::kNone:
      return "none";
  }
  return "none";
}

ExtremalTreeClass recognize_extremal_tree(const Graph& t) {
  require_tree(t);
  const int n = t.order();
  if (n == 3) return ExtremalTreeClass::kP3;
  if (n == 4) return max_degree(t) == 3 ? ExtremalTreeClass::kK13 : ExtremalTreeClass::kP4;
  if (n % 2 == 1) return is_spider(t, (n - 1) / 2) ? ExtremalTreeClass::kSpider : ExtremalTreeClass::kNone;

  const int diam = *diameter(t);
  const VertexSet leaf_set = leaves(t);
  if (diam <= 4) {
    bool found = false;
    leaf_set.for_each([&](int w) {
      if (!found) found = is_spider(t.induced(t.vertices() - VertexSet::single(w)), (n - 2) / 2);
    });
    return found ? ExtremalTreeClass::kSpiderPlusLeaf : ExtremalTreeClass::kNone;
  }
  if (diam > 7) return ExtremalTreeClass::kNone;

  const std::vector<int> leaf_list = leaf_set.members();
  for (int a : leaf_list) {
    auto dist = distances_from(t, a);
    for (int b : leaf_list) {
      if (b <= a || dist[static_cast<std::size_t>(b)] != diam) continue;
      const std::vector<int> spine = tree_path(t, a, b);
      if (diam == 5 && matches_spine_family(t, spine, {2, 3}, -1)) return ExtremalTreeClass::kDiameter5;
      if (diam == 6 && matches_spine_family(t, spine, {2, 4}, 3)) return ExtremalTreeClass::kDiameter6;
      if (diam == 7 && matches_spine_family(t, spine, {2, 5}, -1)) return ExtremalTreeClass::kDiameter7;
    }
  }
  return ExtremalTreeClass::kNone;
}

TheoremReport check_extremal_tree(const Graph& t) {
  TheoremReport r = start(claims::kExtremalTrees, t);
  if (!is_tree(t) || t.order() < 3) return not_applicable(std::move(r), "not a tree on at least 3 vertices");
  auto nu_prime = min_maximal_matching(t);
  const bool oracle = nu_prime.value == (t.order() - 1) / 2;
  const ExtremalTreeClass cls = recognize_extremal_tree(t);
  const bool recognized = cls != ExtremalTreeClass::kNone;
  r.computed["nu_prime"] = std::int64_t{nu_prime.value};
  r.computed["oracle_extremal"] = oracle;
  r.computed["class"] = std::string(to_string(cls));
  r.witnesses["min_maximal_matching"] = nu_prime.witness.edges();
  judge(r, "oracle_extremal", as_int(oracle), "==", "recognized", as_int(recognized), r.graph6);
  return r;
}

ExtremalTreeConditions extremal_tree_conditions(const Graph& t) {
  if (!is_extremal_tree_oracle(t)) throw DomainError("tree is not extremal");
  const int n = t.order();
  const bool even = n % 2 == 0;
  const int diam = *diameter(t);
  ExtremalTreeConditions out;
  out.status.fill(ConditionStatus::kHolds);

  for_each_matching(t, [&](const Matching& m) {
    const VertexSet rest = t.vertices() - m.covered();
    int odd = 0;
    bool even_parts_are_k2 = true;
    for (VertexSet comp : components(t, rest)) {
      if (comp.size() % 2 == 1) {
        ++odd;
      } else if (comp.size() != 2) {
        even_parts_are_k2 = false;
      }
    }
    bool bad = false;
    if (odd > 2) {
      out.status[0] = ConditionStatus::kViolated;
      bad = true;
    }
    if (odd >= 1 && (odd != (even ? 2 : 1) || !even_parts_are_k2)) {
      out.status[1] = ConditionStatus::kViolated;
      bad = true;
    }
    if (bad && !out.violating_matching) out.violating_matching = m;
    return true;
  });

  // Leaf pair (a, b) with a < b whose distance fails `ok`, if any.
  auto leaf_pair_failing = [&](auto ok) -> std::optional<std::pair<int, int>> {
    const std::vector<int> ls = leaves(t).members();
    for (int a : ls) {
      auto dist = distances_from(t, a);
      for (int b : ls) {
        if (b > a && !ok(*dist[static_cast<std::size_t>(b)])) return std::pair{a, b};
      }
    }
    return std::nullopt;
  };

  if (!even && n >= 5) {
    if (auto bad = leaf_pair_failing([](int d) { return d == 4; })) {
      out.status[2] = ConditionStatus::kViolated;
      out.violating_leaves = bad;
    }
  } else {
    out.status[2] = ConditionStatus::kNotApplicable;
  }
  if (even && n >= 6) {
    if (diam < 4) out.status[3] = ConditionStatus::kViolated;
  } else {
    out.status[3] = ConditionStatus::kNotApplicable;
  }
  if (even) {
    if (diam > 7) out.status[4] = ConditionStatus::kViolated;
  } else {
    out.status[4] = ConditionStatus::kNotApplicable;
  }
  if (even && diam >= 5) {
    if (auto bad = leaf_pair_failing([](int d) { return d >= 4; })) {
      out.status[5] = ConditionStatus::kViolated;
      if (!out.violating_leaves) out.violating_leaves = bad;
    }
  } else {
    out.status[5] = ConditionStatus::kNotApplicable;
  }
  return out;
}

TheoremReport check_extremal_tree_conditions(const Graph& t) {
  TheoremReport r = start(claims::kExtremalTreeConditions, t);
  if (!is_tree(t) || t.order() < 3) return not_applicable(std::move(r), "not a tree on at least 3 vertices");
  if (!is_extremal_tree_oracle(t)) return not_applicable(std::move(r), "tree is not extremal");
  const ExtremalTreeConditions c = extremal_tree_conditions(t);
  int applicable = 0;
  int violated = 0;
  for (std::size_t i = 0; i < c.status.size(); ++i) {
    const ConditionStatus s = c.status[i];
    const std::string key = "condition_" + std::to_string(i + 1);
    r.computed[key] = std::string(s == ConditionStatus::kHolds      ? "holds"
                                  : s == ConditionStatus::kViolated ? "violated"
                                                                    : "not-applicable");
    if (s != ConditionStatus::kNotApplicable) ++applicable;
    if (s == ConditionStatus::kViolated) ++violated;
  }
  if (c.violating_matching) r.witnesses["violating_matching"] = c.violating_matching->edges();
  if (c.violating_leaves) {
    r.witnesses["violating_leaves"] = VertexSet::single(c.violating_leaves->first) |
                                      VertexSet::single(c.violating_leaves->second);
  }
  r.computed["applicable_conditions"] = std::int64_t{applicable};
  judge(r, "violated_conditions", violated, "==", "zero", 0);
  return r;
}

TheoremReport check_randomly_matchable(const Graph& g) {
  TheoremReport r = start(claims::kRandomlyMatchable, g);
  const int n = g.order();
  if (n == 0 || n % 2 == 1) return not_applicable(std::move(r), "order is not even");
  if (!is_connected(g)) return not_applicable(std::move(r), "graph is not connected");
  const bool randomly = is_randomly_matchable(g);
  const bool structure = is_isomorphic(g, complete(n)) || is_isomorphic(g, complete_bipartite(n / 2, n / 2));
  r.computed["randomly_matchable"] = randomly;
  r.computed["complete_or_balanced_bipartite"] = structure;
  judge(r, "randomly_matchable", as_int(randomly), "==", "complete_or_balanced_bipartite", as_int(structure));
  return r;
}

TheoremReport check_isolating_canonicalization(const Graph& g) {
  TheoremReport r = start(claims::kIsolatingCanonicalization, g);
  std::optional<MiddleGraph> mg;
  try {
    mg.emplace(middle_graph(g));
  } catch (const CapacityError& e) {
    return not_applicable(std::move(r), e.what());
  }
  const Graph& mid = mg->graph();
  const int k = isolation_number(mid).value;
  int sets = 0;
  int failures = 0;
  for_each_subset_of_size(mid.order(), k, [&](std::uint64_t bits) {
    const VertexSet s(bits);
    if (!is_isolating(mid, s)) return true;
    ++sets;
    VertexSet out;
    bool ok = true;
    try {
      out = canonicalize_isolating_set(*mg, s);
    } catch (const DomainError&) {
      ok = false;
    }
    ok = ok && out.size() == k && is_isolating(mid, out) && !out.intersects(mg->originals());
    if (!ok) {
      ++failures;
      r.witnesses["input_set"] = s;
      r.witnesses["output_set"] = out;
    }
    return ok;
  });
  r.computed["iota_mid"] = std::int64_t{k};
  r.computed["minimum_isolating_sets"] = std::int64_t{sets};
  judge(r, "failed_sets", failures, "==", "zero", 0);
  return r;
}

TheoremReport check_theta_procedure(const Graph& g) {
  TheoremReport r = start(claims::kThetaProcedure, g);
  const std::vector<Edge> all_edges = g.edges();
  const int k = tau(g).value;
  int sets = 0;
  int failures = 0;
  for_each_subset_of_size(static_cast<int>(all_edges.size()), k, [&](std::uint64_t bits) {
    const EdgeSet e0 = edges_from_mask(all_edges, bits);
    if (!theta_member(g, e0)) return true;
    ++sets;
    Matching m;
    bool ok = true;
    try {
      m = theta_to_maximal_matching(g, e0);
    } catch (const DomainError&) {
      ok = false;
    }
    ok = ok && m.size() == k && is_maximal_matching(g, m);
    if (!ok) {
      ++failures;
      r.witnesses["input_set"] = e0;
      r.witnesses["output_matching"] = m.edges();
    }
    return ok;
  });
  r.computed["tau"] = std::int64_t{k};
  r.computed["minimum_theta_sets"] = std::int64_t{sets};
  judge(r, "failed_sets", failures, "==", "zero", 0);
  return r;
}

}  // namespace midiso
