#pragma once

#include <algorithm>
#include <optional>
#include <vector>

namespace midiso::detail {

// Turns any optimum into the lexicographically smallest one of the same size.
//
// Items are non-negative integers. feasible(forced, lower) must return an
// optimum that contains every item of `forced` (sorted, all < lower) and whose
// remaining items are all >= lower, or nullopt if none exists. At each position
// the smallest admissible item is fixed in turn; the current witness bounds
// the scan because its own item is known to be admissible.
template <class Feasible>
std::vector<int> lexicographically_smallest(std::vector<int> witness, Feasible&& feasible) {
  std::sort(witness.begin(), witness.end());
  std::vector<int> prefix;
  int lower = 0;
  for (std::size_t pos = 0; pos < witness.size(); ++pos) {
    for (int a = lower; a < witness[pos]; ++a) {
      prefix.push_back(a);
      std::optional<std::vector<int>> found = feasible(prefix, a + 1);
      prefix.pop_back();
      if (found) {
        witness = std::move(*found);
        std::sort(witness.begin(), witness.end());
        break;
      }
    }
    prefix.push_back(witness[pos]);
    lower = witness[pos] + 1;
  }
  return witness;
}

}  // namespace midiso::detail
