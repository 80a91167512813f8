#pragma once

#include <functional>
#include <vector>

#include "midiso/graph.hpp"
#include "midiso/solvers.hpp"

namespace midiso {

/// Edges all in G and pairwise vertex-disjoint.
bool is_matching(const Graph& g, const EdgeSet& edges);

// The predicates below throw DomainError when m uses a non-edge of g.

/// No edge of G has both endpoints unmatched.
bool is_maximal_matching(const Graph& g, const Matching& m);
/// |V(M)| == n
bool is_perfect(const Graph& g, const Matching& m);
/// |V(M)| == n - 1
bool is_near_perfect(const Graph& g, const Matching& m);

/// nu(G), via Edmonds' blossom algorithm.
Witnessed<Matching> maximum_matching(const Graph& g);
/// Size of a maximum matching of G[within].
int matching_number(const Graph& g, VertexSet within);

/// nu'(G): a smallest maximal matching (minimum independent edge dominating set).
Witnessed<Matching> min_maximal_matching(const Graph& g);

/// Visits every maximal matching exactly once, in a fixed order. Enumeration
/// stops early when `visit` returns false.
void for_each_maximal_matching(const Graph& g, const std::function<bool(const Matching&)>& visit);
std::vector<Matching> enumerate_maximal_matchings(const Graph& g);
/// Visits every matching (including the empty one) exactly once.
void for_each_matching(const Graph& g, const std::function<bool(const Matching&)>& visit);

/// E0 is in Theta(G): the vertices untouched by E0 form an independent set.
/// DomainError if E0 contains a non-edge.
bool theta_member(const Graph& g, const EdgeSet& e0);
/// tau(G) = min |E0| over Theta(G), found by a search over edge subsets that
/// does not restrict itself to matchings.
Witnessed<EdgeSet> tau(const Graph& g);

/// Turns a minimum member of Theta(G) into a maximal matching of the same
/// size. While two chosen edges v1v2, v1v3 share an endpoint, the later edge
/// is exchanged for v3vt with vt untouched if such vt exists, and deleted
/// otherwise. DomainError unless E0 is in Theta(G) with |E0| == tau(G).
Matching theta_to_maximal_matching(const Graph& g, const EdgeSet& e0);

/// nu'(G) == nu(G)
bool is_equimatchable(const Graph& g);
/// Every maximal matching is perfect.
bool is_randomly_matchable(const Graph& g);

}  // namespace midiso
