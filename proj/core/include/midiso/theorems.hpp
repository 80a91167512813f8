#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "midiso/graph.hpp"
#include "midiso/matching.hpp"
#include "midiso/report.hpp"

namespace midiso {

/// Claim identifiers used in reports and on the command line.
namespace claims {
inline constexpr std::string_view kMainTheorem = "mid-isolation-equals-min-maximal-matching";
inline constexpr std::string_view kTauChain = "mid-isolation-tau-chain";
inline constexpr std::string_view kBoundHalfDomination = "bound-half-domination";
inline constexpr std::string_view kBoundIsolation = "bound-isolation-lower";
inline constexpr std::string_view kBoundDegreeTimesIsolation = "bound-degree-times-isolation";
inline constexpr std::string_view kBoundEdgesOverDegree = "bound-edges-over-degree";
inline constexpr std::string_view kBoundOrderMinusIndependence = "bound-order-minus-independence";
inline constexpr std::string_view kBoundHalfOrder = "bound-half-order";
inline constexpr std::string_view kFormulaPath = "formula-path";
inline constexpr std::string_view kFormulaCycle = "formula-cycle";
inline constexpr std::string_view kFormulaComplete = "formula-complete";
inline constexpr std::string_view kFormulaCompleteBipartite = "formula-complete-bipartite";
inline constexpr std::string_view kSharpDegreeTimesIsolation = "sharp-degree-times-isolation";
inline constexpr std::string_view kSharpHalfDomination = "sharp-half-domination";
inline constexpr std::string_view kHalfOrderEquality = "half-order-equality";
inline constexpr std::string_view kTreeUpperBound = "tree-upper-bound";
inline constexpr std::string_view kExtremalTrees = "extremal-tree-classification";
inline constexpr std::string_view kExtremalTreeConditions = "extremal-tree-conditions";
inline constexpr std::string_view kRandomlyMatchable = "randomly-matchable-characterization";
inline constexpr std::string_view kIsolatingCanonicalization = "isolating-set-canonicalization";
inline constexpr std::string_view kThetaProcedure = "theta-to-maximal-matching";

/// Every identifier above, in declaration order.
std::vector<std::string_view> all();
}  // namespace claims

// Closed forms for iota(Mid(G)); DomainError below each family's minimum.

/// floor((n+1)/3), n >= 2
int formula_path(int n);
/// floor((n+2)/3), n >= 3
int formula_cycle(int n);
/// floor(n/2), n >= 1
int formula_complete(int n);
/// min(a, b), a, b >= 1
int formula_complete_bipartite(int a, int b);

/// iota(Mid(G)) by isolation search on Mid(G) against nu'(G) by matching
/// search. Not applicable when Mid(G) exceeds 64 vertices.
TheoremReport verify_main_theorem(const Graph& g);

/// iota(Mid(G)), tau(G) and the smallest enumerated maximal matching, each
/// computed on its own, must coincide.
TheoremReport verify_tau_chain(const Graph& g);

/// One report per inequality: half-domination (no isolated vertices),
/// isolation lower bound, degree-times-isolation, edges over 2*Delta-1
/// (Delta >= 1), order minus independence, and floor(n/2).
std::vector<TheoremReport> check_bounds(const Graph& g);

/// nu'(family member) against the closed form; when the order is at most
/// `direct_limit`, iota(Mid(.)) is searched directly as well.
TheoremReport check_path_formula(int n, int direct_limit = 10);
TheoremReport check_cycle_formula(int n, int direct_limit = 10);
TheoremReport check_complete_formula(int n, int direct_limit = 10);
TheoremReport check_complete_bipartite_formula(int a, int b, int direct_limit = 10);

/// K_{k,k} attains iota(Mid) == Delta * iota(G).
TheoremReport check_degree_isolation_sharpness(int k);
/// The graph h (which must have a perfect matching) with a pendant leaf on
/// every vertex attains 2 * iota(Mid) == gamma.
TheoremReport check_half_domination_sharpness(const Graph& h);

/// For connected G: nu'(G) == floor(n/2) against the structural side (G is K_n
/// or K_{n/2,n/2} for even n; every maximal matching is near-perfect for odd
/// n). Passes iff both sides agree.
TheoremReport classify_half_equality(const Graph& g);

/// nu'(T) <= floor((n-1)/2) for trees with n >= 3.
TheoremReport tree_upper_bound(const Graph& t);

/// nu'(T) == floor((n-1)/2). DomainError unless T is a tree with n >= 3.
bool is_extremal_tree_oracle(const Graph& t);

enum class ExtremalTreeClass {
  kP3,
  kP4,
  kK13,
  kSpider,
  kSpiderPlusLeaf,
  kDiameter5,
  kDiameter6,
  kDiameter7,
  kNone,
};
std::string_view to_string(ExtremalTreeClass c);

/// Structural recognition of the trees attaining floor((n-1)/2), without
/// computing any matching invariant:
///   n = 3, 4            P3, P4, K13
///   n odd >= 5          the spider with (n-1)/2 legs of length two
///   n even, diam <= 4   deleting some leaf leaves that spider
///   n even, diam 5      path u0..u5 plus pendant K2's hung from u2 or u3
///   n even, diam 6      path u0..u6, one leaf at u3, pendant K2's at u2 or u4
///   n even, diam 7      path u0..u7 plus pendant K2's hung from u2 or u5
/// DomainError unless T is a tree with n >= 3.
ExtremalTreeClass recognize_extremal_tree(const Graph& t);

/// Oracle and recognizer must agree.
TheoremReport check_extremal_tree(const Graph& t);

enum class ConditionStatus { kHolds, kViolated, kNotApplicable };

/// Six structural conditions every extremal tree satisfies; the first two
/// quantify over every matching N of T (not only maximal ones).
///   0: o(T - V(N)) <= 2
///   1: if o(T - V(N)) >= 1 it equals 2 (n even) or 1 (n odd), and every even
///      component of T - V(N) is K2
///   2: n odd, n >= 5: every two leaves are at distance 4
///   3: n even, n >= 6: diameter >= 4
///   4: n even: diameter <= 7
///   5: n even, diameter >= 5: every two leaves are at distance >= 4
struct ExtremalTreeConditions {
  std::array<ConditionStatus, 6> status{};
  /// A matching violating condition 0 or 1, if any.
  std::optional<Matching> violating_matching;
  /// A leaf pair violating condition 2 or 5, if any.
  std::optional<std::pair<int, int>> violating_leaves;
};

/// DomainError unless T is a tree with n >= 3 whose oracle says extremal.
ExtremalTreeConditions extremal_tree_conditions(const Graph& t);
/// Not applicable for non-extremal trees.
TheoremReport check_extremal_tree_conditions(const Graph& t);

/// For connected G of even order: randomly matchable iff G is K_n or
/// K_{n/2,n/2}.
TheoremReport check_randomly_matchable(const Graph& g);

/// Every minimum isolating set of Mid(G) canonicalises to an equal-size
/// isolating set avoiding the originals.
TheoremReport check_isolating_canonicalization(const Graph& g);

/// Every minimum member of Theta(G) becomes a maximal matching of equal size.
TheoremReport check_theta_procedure(const Graph& g);

}  // namespace midiso
