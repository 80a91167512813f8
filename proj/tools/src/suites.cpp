#include "midiso/cli/suites.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <iterator>
#include <mutex>
#include <ostream>
#include <thread>

#include "midiso/enumerate.hpp"
#include "midiso/errors.hpp"
#include "midiso/generators.hpp"
#include "midiso/theorems.hpp"

namespace midiso::cli {
namespace {

constexpr std::array<std::string_view, 6> kBoundClaims = {
    claims::kBoundHalfDomination,  claims::kBoundIsolation,       claims::kBoundDegreeTimesIsolation,
    claims::kBoundEdgesOverDegree, claims::kBoundOrderMinusIndependence, claims::kBoundHalfOrder};

template <class Check>
Job single(std::string_view claim, Check check) {
  return [claim, check](const ClaimFilter& filter) {
    std::vector<TheoremReport> out;
    if (filter.wants(claim)) out.push_back(check());
    return out;
  };
}

void add_graph_jobs(std::vector<Job>& jobs, std::vector<Graph> graphs) {
  for (Graph& g : graphs) {
    jobs.push_back([g = std::move(g)](const ClaimFilter& filter) { return graph_checks(g, filter); });
  }
}

void add_formula_jobs(std::vector<Job>& jobs) {
  for (int n = 2; n <= 30; ++n) jobs.push_back(single(claims::kFormulaPath, [n] { return check_path_formula(n); }));
  for (int n = 3; n <= 30; ++n) jobs.push_back(single(claims::kFormulaCycle, [n] { return check_cycle_formula(n); }));
  for (int n = 1; n <= 10; ++n) {
    jobs.push_back(single(claims::kFormulaComplete, [n] { return check_complete_formula(n); }));
  }
  for (int a = 1; a <= 5; ++a) {
    for (int b = 1; b <= 5; ++b) {
      jobs.push_back(
          single(claims::kFormulaCompleteBipartite, [a, b] { return check_complete_bipartite_formula(a, b); }));
    }
  }
  for (int k = 1; k <= 4; ++k) {
    jobs.push_back(single(claims::kSharpDegreeTimesIsolation, [k] { return check_degree_isolation_sharpness(k); }));
  }
  for (int k = 2; k <= 3; ++k) {
    jobs.push_back(single(claims::kSharpHalfDomination,
                          [k] { return check_half_domination_sharpness(perfect_matching_graph(k)); }));
  }
}

}  // namespace

Tier parse_tier(std::string_view name) {
  if (name == "exhaustive") return Tier::kExhaustive;
  if (name == "spot") return Tier::kSpot;
  if (name == "formulas") return Tier::kFormulas;
  if (name == "all") return Tier::kAll;
  throw ParseError("unknown tier '" + std::string(name) + "'");
}

ClaimFilter ClaimFilter::parse(std::string_view list) {
  ClaimFilter f;
  const std::vector<std::string_view> known = claims::all();
  while (!list.empty()) {
    const auto comma = list.find(',');
    const std::string_view id = list.substr(0, comma);
    if (!id.empty()) {
      if (std::find(known.begin(), known.end(), id) == known.end()) {
        throw ParseError("unknown claim '" + std::string(id) + "'");
      }
      f.ids_.insert(std::string(id));
    }
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  return f;
}

bool ClaimFilter::wants_any(std::span<const std::string_view> ids) const {
  return std::any_of(ids.begin(), ids.end(), [&](std::string_view id) { return wants(id); });
}

std::vector<TheoremReport> graph_checks(const Graph& g, const ClaimFilter& filter) {
  std::vector<TheoremReport> out;
  if (filter.wants(claims::kMainTheorem)) out.push_back(verify_main_theorem(g));
  if (filter.wants(claims::kTauChain)) out.push_back(verify_tau_chain(g));
  if (filter.wants_any(kBoundClaims)) {
    for (TheoremReport& r : check_bounds(g)) {
      if (filter.wants(r.claim_id)) out.push_back(std::move(r));
    }
  }
  if (filter.wants(claims::kHalfOrderEquality)) out.push_back(classify_half_equality(g));
  if (filter.wants(claims::kRandomlyMatchable)) out.push_back(check_randomly_matchable(g));
  if (filter.wants(claims::kIsolatingCanonicalization)) out.push_back(check_isolating_canonicalization(g));
  if (filter.wants(claims::kThetaProcedure)) out.push_back(check_theta_procedure(g));
  return out;
}

std::vector<TheoremReport> tree_checks(const Graph& t, const ClaimFilter& filter) {
  std::vector<TheoremReport> out;
  if (filter.wants(claims::kTreeUpperBound)) out.push_back(tree_upper_bound(t));
  if (filter.wants(claims::kExtremalTrees)) out.push_back(check_extremal_tree(t));
  if (filter.wants(claims::kExtremalTreeConditions)) out.push_back(check_extremal_tree_conditions(t));
  return out;
}

std::vector<Job> suite_jobs(const SuiteOptions& o) {
  if (o.max_n < 1 || o.max_n > 7) throw DomainError("--max-n must lie in [1, 7]");
  if (o.max_tree_n < 3 || o.max_tree_n > 12) throw DomainError("--max-tree-n must lie in [3, 12]");
  if (o.spot_count < 0) throw DomainError("--count must be non-negative");
  std::vector<Job> jobs;
  const bool all = o.tier == Tier::kAll;
  if (all || o.tier == Tier::kExhaustive) {
    for (int n = 1; n <= o.max_n; ++n) add_graph_jobs(jobs, all_connected_graphs(n, o.allow_long));
    for (int n = 3; n <= o.max_tree_n; ++n) {
      for (Graph& t : all_trees(n)) {
        jobs.push_back([t = std::move(t)](const ClaimFilter& filter) { return tree_checks(t, filter); });
      }
    }
  }
  if (all || o.tier == Tier::kSpot) {
    const std::array<int, 2> orders = {7, 8};
    add_graph_jobs(jobs, seeded_connected_corpus(orders, o.spot_count, o.seed));
    add_graph_jobs(jobs, {complete(8), complete_bipartite(4, 4)});
  }
  if (all || o.tier == Tier::kFormulas) add_formula_jobs(jobs);
  return jobs;
}

std::vector<TheoremReport> run_jobs(std::span<const Job> jobs, const ClaimFilter& filter, int workers,
                                    std::ostream* progress) {
  std::vector<std::vector<TheoremReport>> slots(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> done{0};
  std::mutex progress_mutex;
  const std::size_t step = std::max<std::size_t>(1, jobs.size() / 20);

  auto work = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        slots[i] = jobs[i](filter);
      } catch (...) {
        errors[i] = std::current_exception();
      }
      const std::size_t finished = ++done;
      if (progress != nullptr && (finished % step == 0 || finished == jobs.size())) {
        std::lock_guard lock(progress_mutex);
        *progress << "verify: " << finished << "/" << jobs.size() << " jobs\n" << std::flush;
      }
    }
  };
  const int threads = std::clamp(workers, 1, 256);
  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
  }

  // Rethrow the lowest-indexed failure so the error is independent of scheduling.
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<TheoremReport> out;
  for (auto& slot : slots) std::move(slot.begin(), slot.end(), std::back_inserter(out));
  sort_reports(out);
  return out;
}

}  // namespace midiso::cli
