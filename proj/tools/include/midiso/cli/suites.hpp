#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "midiso/graph.hpp"
#include "midiso/report.hpp"

namespace midiso::cli {

enum class Tier { kExhaustive, kSpot, kFormulas, kAll };

/// Throws ParseError on an unknown name.
Tier parse_tier(std::string_view name);

/// Claim selection; an empty set selects every claim.
class ClaimFilter {
 public:
  ClaimFilter() = default;
  /// Comma-separated claim ids; throws ParseError on an unknown id.
  static ClaimFilter parse(std::string_view list);

  bool wants(std::string_view id) const { return ids_.empty() || ids_.contains(std::string(id)); }
  bool wants_any(std::span<const std::string_view> ids) const;

 private:
  std::set<std::string> ids_;
};

struct SuiteOptions {
  Tier tier = Tier::kAll;
  int max_n = 6;
  int max_tree_n = 12;
  std::uint64_t seed = 1;
  int spot_count = 500;
  bool allow_long = false;
};

/// One unit of work: reports for the selected claims it covers.
using Job = std::function<std::vector<TheoremReport>(const ClaimFilter&)>;

/// Every claim that takes an arbitrary graph (tree claims report
/// not-applicable on non-trees).
std::vector<TheoremReport> graph_checks(const Graph& g, const ClaimFilter& filter);
std::vector<TheoremReport> tree_checks(const Graph& t, const ClaimFilter& filter);

/// Throws DomainError when caps are outside what the enumerators support.
std::vector<Job> suite_jobs(const SuiteOptions& options);

/// Runs jobs on `workers` threads and returns the reports sorted by graph6
/// then claim id; the result does not depend on `workers`. Progress lines go
/// to `progress` when it is non-null.
std::vector<TheoremReport> run_jobs(std::span<const Job> jobs, const ClaimFilter& filter, int workers,
                                    std::ostream* progress);

}  // namespace midiso::cli
