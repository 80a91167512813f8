#pragma once

#include "midiso/graph.hpp"

namespace midiso {

// Named families. Parameters below a family's minimum throw DomainError;
// orders above 64 throw CapacityError.

Graph edgeless(int n);
/// P_n: 0-1-...-(n-1), n >= 1.
Graph path(int n);
/// C_n, n >= 3.
Graph cycle(int n);
/// K_n, n >= 1.
Graph complete(int n);
/// K_{a,b} with parts {0..a-1} and {a..a+b-1}; a, b >= 1.
Graph complete_bipartite(int a, int b);
/// K_{1,k} with centre 0, k >= 1.
Graph star(int k);

/// Spider with centre 0 and k legs of length two; leg i is 0-(2i+1)-(2i+2).
/// Order 2k+1, k >= 2.
Graph spider_t1(int k);

/// k disjoint copies of K_2 on {2i, 2i+1}, k >= 1.
Graph perfect_matching_graph(int k);

/// Attaches one new pendant vertex n+v to every vertex v of h.
Graph leaf_corona(const Graph& h);

/// Disjoint union; b's vertices are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace midiso
