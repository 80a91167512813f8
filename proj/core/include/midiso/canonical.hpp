#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "midiso/graph.hpp"

namespace midiso {

/// Relabelling-invariant key: equal for two graphs iff they are isomorphic.
///
/// Trees are encoded by their centre-rooted parenthesis string, which is
/// linear-time. Other graphs use the smallest adjacency matrix over the leaves
/// of an individualisation-refinement search (equitable partitions, no
/// automorphism pruning); intended for orders up to about 10.
class CanonicalForm {
 public:
  int order() const { return order_; }
  bool is_tree_form() const { return !tree_code_.empty(); }

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;

 private:
  friend CanonicalForm canonical_form(const Graph& g);

  int order_ = 0;
  std::string tree_code_;
  std::vector<std::uint64_t> rows_;
};

CanonicalForm canonical_form(const Graph& g);

/// Cheap invariants first (order, size, degree sequence), then canonical forms.
bool is_isomorphic(const Graph& g, const Graph& h);

}  // namespace midiso
