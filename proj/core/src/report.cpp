#include "midiso/report.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <sstream>

namespace midiso {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kNotApplicable:
      return "not-applicable";
  }
  return "unknown";
}

bool violation_confirmed(const Counterexample& c) {
  if (c.relation == "==") return c.lhs != c.rhs;
  if (c.relation == "<=") return c.lhs > c.rhs;
  if (c.relation == ">=") return c.lhs < c.rhs;
  return false;
}

std::string to_json_line(const TheoremReport& r) {
  using nlohmann::json;
  json out;
  out["claim_id"] = r.claim_id;
  out["graph6"] = r.graph6;

  json computed = json::object();
  for (const auto& [name, value] : r.computed) {
    std::visit([&](const auto& v) { computed[name] = v; }, value);
  }
  out["computed"] = std::move(computed);
  out["verdict"] = std::string(to_string(r.verdict));

  json witnesses = json::object();
  for (const auto& [name, payload] : r.witnesses) {
    if (const auto* vs = std::get_if<VertexSet>(&payload)) {
      witnesses[name] = vs->members();
    } else {
      json pairs = json::array();
      for (const Edge& e : std::get<EdgeSet>(payload)) pairs.push_back({e.u, e.v});
      witnesses[name] = std::move(pairs);
    }
  }
  out["witnesses"] = std::move(witnesses);

  if (r.counterexample) {
    const Counterexample& c = *r.counterexample;
    out["counterexample"] = {{"lhs_name", c.lhs_name}, {"lhs", c.lhs},         {"relation", c.relation},
                             {"rhs_name", c.rhs_name}, {"rhs", c.rhs},         {"detail", c.detail}};
  }
  return out.dump();
}

std::vector<ClaimTally> tally(std::span<const TheoremReport> reports) {
  std::map<std::string, ClaimTally> by_claim;
  for (const TheoremReport& r : reports) {
    ClaimTally& t = by_claim[r.claim_id];
    t.claim_id = r.claim_id;
    ++t.graphs_checked;
    if (r.verdict == Verdict::kPass) ++t.passes;
    if (r.verdict == Verdict::kFail) ++t.failures;
  }
  std::vector<ClaimTally> out;
  for (auto& [id, t] : by_claim) out.push_back(t);
  return out;
}

std::string to_csv(std::span<const ClaimTally> tallies) {
  std::ostringstream os;
  os << "claim_id,graphs_checked,passes,failures\n";
  for (const ClaimTally& t : tallies) {
    os << t.claim_id << ',' << t.graphs_checked << ',' << t.passes << ',' << t.failures << '\n';
  }
  return os.str();
}

void sort_reports(std::vector<TheoremReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(), [](const TheoremReport& a, const TheoremReport& b) {
    if (a.graph6 != b.graph6) return a.graph6 < b.graph6;
    return a.claim_id < b.claim_id;
  });
}

}  // namespace midiso
