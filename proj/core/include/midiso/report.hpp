#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "midiso/graph.hpp"

namespace midiso {

enum class Verdict { kPass, kFail, kNotApplicable };

/// "pass", "fail" or "not-applicable".
std::string_view to_string(Verdict v);

using ReportValue = std::variant<std::int64_t, bool, std::string>;
using WitnessPayload = std::variant<VertexSet, EdgeSet>;

/// The violated relation, recorded with the raw values that violate it.
struct Counterexample {
  std::string lhs_name;
  std::int64_t lhs = 0;
  std::string relation;  // "==", "<=" or ">="
  std::string rhs_name;
  std::int64_t rhs = 0;
  std::string detail;
};

/// True iff `lhs relation rhs` is false for the recorded values.
bool violation_confirmed(const Counterexample& c);

/// One claim checked on one graph.
struct TheoremReport {
  std::string claim_id;
  std::string graph6;
  std::map<std::string, ReportValue> computed;
  Verdict verdict = Verdict::kNotApplicable;
  std::map<std::string, WitnessPayload> witnesses;
  std::optional<Counterexample> counterexample;
};

/// {claim_id, graph6, computed, verdict, witnesses, counterexample?} on one
/// line. Vertex sets serialise as index arrays, edge sets as [u,v] pairs.
std::string to_json_line(const TheoremReport& r);

struct ClaimTally {
  std::string claim_id;
  int graphs_checked = 0;
  int passes = 0;
  int failures = 0;
};

/// Per-claim counts, ordered by claim id.
std::vector<ClaimTally> tally(std::span<const TheoremReport> reports);
/// "claim_id,graphs_checked,passes,failures" header plus one row per claim.
std::string to_csv(std::span<const ClaimTally> tallies);

/// Sorts by (graph6, claim_id); stable, so equal keys keep their order.
void sort_reports(std::vector<TheoremReport>& reports);

}  // namespace midiso
