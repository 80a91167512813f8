#include "midiso/cli/app.hpp"

#include <CLI/CLI.hpp>

#include <fstream>
#include <functional>
#include <nlohmann/json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "midiso/cli/source.hpp"
#include "midiso/cli/suites.hpp"
#include "midiso/enumerate.hpp"
#include "midiso/errors.hpp"
#include "midiso/graph_io.hpp"
#include "midiso/matching.hpp"
#include "midiso/middle_graph.hpp"
#include "midiso/solvers.hpp"
#include "midiso/theorems.hpp"

namespace midiso::cli {
namespace {

using nlohmann::json;

class OutputError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Writes to `path`, or to `fallback` when no path was given.
void emit(const std::string& path, std::ostream& fallback, const std::function<void(std::ostream&)>& write) {
  if (path.empty()) {
    write(fallback);
    fallback.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw OutputError("cannot open '" + path + "' for writing");
  write(file);
  if (!file.flush()) throw OutputError("write to '" + path + "' failed");
}

json to_json(VertexSet s) { return s.members(); }

json to_json(const EdgeSet& e) {
  json out = json::array();
  for (const Edge& x : e) out.push_back({x.u, x.v});
  return out;
}

std::string to_text(VertexSet s) {
  std::string out = "{";
  s.for_each([&](int v) { out += (out.size() > 1 ? ", " : "") + std::to_string(v); });
  return out + "}";
}

std::string to_text(const EdgeSet& e) {
  std::string out = "{";
  for (const Edge& x : e) out += (out.size() > 1 ? ", " : "") + std::to_string(x.u) + "-" + std::to_string(x.v);
  return out + "}";
}

// ---------------------------------------------------------------- compute

struct ComputeConfig {
  std::string input;
  std::string format = "text";
  std::string out;
};

int cmd_compute(const ComputeConfig& c, std::ostream& out, std::ostream& err) {
  const Graph g = resolve_graph(c.input);
  const auto gamma = domination_number(g);
  const auto alpha = independence_number(g);
  const auto iota = isolation_number(g);
  const auto nu = maximum_matching(g);
  const auto nu_prime = min_maximal_matching(g);
  const auto t = tau(g);

  std::optional<MiddleGraph> mg;
  std::optional<Witnessed<VertexSet>> iota_mid;
  std::string capacity_reason;
  try {
    mg.emplace(middle_graph(g));
    iota_mid = isolation_number(mg->graph());
  } catch (const CapacityError& e) {
    capacity_reason = e.what();
  }

  emit(c.out, out, [&](std::ostream& os) {
    if (c.format == "json") {
      json j;
      j["graph6"] = to_graph6(g);
      j["n"] = g.order();
      j["m"] = g.edge_count();
      j["max_degree"] = max_degree(g);
      j["min_degree"] = min_degree(g);
      j["domination"] = {{"value", gamma.value}, {"witness", to_json(gamma.witness)}};
      j["independence"] = {{"value", alpha.value}, {"witness", to_json(alpha.witness)}};
      j["isolation"] = {{"value", iota.value}, {"witness", to_json(iota.witness)}};
      j["matching_number"] = {{"value", nu.value}, {"witness", to_json(nu.witness.edges())}};
      j["min_maximal_matching"] = {{"value", nu_prime.value}, {"witness", to_json(nu_prime.witness.edges())}};
      j["tau"] = {{"value", t.value}, {"witness", to_json(t.witness)}};
      if (iota_mid) {
        j["mid_isolation"] = {{"value", iota_mid->value},
                              {"witness", to_json(iota_mid->witness)},
                              {"witness_edges", to_json(mg->edges_of(iota_mid->witness))}};
      } else {
        j["mid_isolation"] = {{"unavailable", capacity_reason}};
      }
      os << j.dump() << '\n';
      return;
    }
    auto row = [&](std::string_view name, const std::string& value) {
      os << name << std::string(22 - name.size(), ' ') << value << '\n';
    };
    row("graph6", to_graph6(g));
    row("n", std::to_string(g.order()));
    row("m", std::to_string(g.edge_count()));
    row("max_degree", std::to_string(max_degree(g)));
    row("min_degree", std::to_string(min_degree(g)));
    row("domination", std::to_string(gamma.value) + "  " + to_text(gamma.witness));
    row("independence", std::to_string(alpha.value) + "  " + to_text(alpha.witness));
    row("isolation", std::to_string(iota.value) + "  " + to_text(iota.witness));
    row("matching_number", std::to_string(nu.value) + "  " + to_text(nu.witness.edges()));
    row("min_maximal_matching", std::to_string(nu_prime.value) + "  " + to_text(nu_prime.witness.edges()));
    row("tau", std::to_string(t.value) + "  " + to_text(t.witness));
    if (iota_mid) {
      // Edge-vertices of the witness are also shown as the edges they subdivide.
      row("mid_isolation", std::to_string(iota_mid->value) + "  " + to_text(iota_mid->witness) + "  edges " +
                               to_text(mg->edges_of(iota_mid->witness)));
    } else {
      row("mid_isolation", "unavailable");
    }
  });
  if (!iota_mid) {
    err << "midiso: " << capacity_reason << '\n';
    return kExitCapacity;
  }
  return kExitOk;
}

// -------------------------------------------------------------- transform

struct TransformConfig {
  std::string input;
  std::string format = "text";
  bool dot = false;
  std::string out;
};

int cmd_transform(const TransformConfig& c, std::ostream& out) {
  const Graph g = resolve_graph(c.input);
  const MiddleGraph mg = middle_graph(g);
  const std::string format = c.dot ? "dot" : c.format;
  emit(c.out, out, [&](std::ostream& os) {
    if (format == "dot") {
      os << to_dot(mg);
    } else if (format == "json") {
      json vertices = json::array();
      for (int v = 0; v < mg.graph().order(); ++v) {
        const VertexOrigin origin = mg.classify_vertex(v);
        if (const auto* o = std::get_if<OriginalVertex>(&origin)) {
          vertices.push_back({{"index", v}, {"kind", "original"}, {"source", o->index}});
        } else {
          const Edge& e = std::get<EdgeVertex>(origin).edge;
          vertices.push_back({{"index", v}, {"kind", "edge"}, {"source", {e.u, e.v}}});
        }
      }
      json j;
      j["graph6"] = to_graph6(mg.graph());
      j["n"] = mg.graph().order();
      j["m"] = mg.graph().edge_count();
      j["vertices"] = std::move(vertices);
      os << j.dump() << '\n';
    } else {
      os << to_graph6(mg.graph()) << '\n';
    }
  });
  return kExitOk;
}

// ----------------------------------------------------------------- verify

struct VerifyConfig {
  std::string input;
  std::string tier = "all";
  std::string claims;
  int max_n = 6;
  int max_tree_n = 12;
  std::uint64_t seed = 1;
  int count = 500;
  std::string format = "json";
  std::string out;
  std::string summary;
  int parallel = 1;
  bool allow_long = false;
  bool quiet = false;
};

void write_text_summary(std::ostream& os, const std::vector<TheoremReport>& reports) {
  const auto tallies = tally(reports);
  for (const ClaimTally& t : tallies) {
    os << t.claim_id << ": " << t.graphs_checked << " checked, " << t.passes << " pass, " << t.failures << " fail, "
       << (t.graphs_checked - t.passes - t.failures) << " not applicable\n";
  }
  for (const TheoremReport& r : reports) {
    if (r.verdict != Verdict::kFail) continue;
    const Counterexample& c = *r.counterexample;
    os << "FAIL " << r.claim_id << " " << r.graph6 << ": " << c.lhs_name << " = " << c.lhs << ", " << c.rhs_name
       << " = " << c.rhs << ", expected " << c.lhs_name << " " << c.relation << " " << c.rhs_name << "\n";
  }
}

int cmd_verify(const VerifyConfig& c, std::ostream& out, std::ostream& err) {
  const ClaimFilter filter = ClaimFilter::parse(c.claims);
  std::vector<Job> jobs;
  if (!c.input.empty()) {
    const Graph g = resolve_graph(c.input);
    jobs.push_back([g](const ClaimFilter& f) {
      std::vector<TheoremReport> reports = graph_checks(g, f);
      for (TheoremReport& r : tree_checks(g, f)) reports.push_back(std::move(r));
      return reports;
    });
  } else {
    SuiteOptions o;
    o.tier = parse_tier(c.tier);
    o.max_n = c.max_n;
    o.max_tree_n = c.max_tree_n;
    o.seed = c.seed;
    o.spot_count = c.count;
    o.allow_long = c.allow_long;
    jobs = suite_jobs(o);
  }
  int workers = c.parallel;
  if (workers == 0) workers = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  const std::vector<TheoremReport> reports = run_jobs(jobs, filter, workers, c.quiet ? nullptr : &err);

  emit(c.out, out, [&](std::ostream& os) {
    if (c.format == "csv") {
      os << to_csv(tally(reports));
    } else if (c.format == "text") {
      write_text_summary(os, reports);
    } else {
      for (const TheoremReport& r : reports) os << to_json_line(r) << '\n';
    }
  });
  if (!c.summary.empty()) {
    emit(c.summary, out, [&](std::ostream& os) { os << to_csv(tally(reports)); });
  }
  int failures = 0;
  for (const TheoremReport& r : reports) failures += r.verdict == Verdict::kFail ? 1 : 0;
  if (!c.quiet) err << "verify: " << reports.size() << " reports, " << failures << " failures\n";
  return failures == 0 ? kExitOk : kExitFailureFound;
}

// ---------------------------------------------------- enumerate-extremal

struct EnumerateConfig {
  int n = 0;
  int max_tree_n = 12;
  std::string format = "text";
  std::string out;
};

int cmd_enumerate_extremal(const EnumerateConfig& c, std::ostream& out, std::ostream& err) {
  const int lo = c.n != 0 ? c.n : 3;
  const int hi = c.n != 0 ? c.n : c.max_tree_n;
  if (lo < 3 || hi > 12) throw DomainError("tree order must lie in [3, 12]");
  int disagreements = 0;
  std::ostringstream buf;
  for (int n = lo; n <= hi; ++n) {
    for (const Graph& t : all_trees(n)) {
      const bool extremal = is_extremal_tree_oracle(t);
      const ExtremalTreeClass cls = recognize_extremal_tree(t);
      const bool recognized = cls != ExtremalTreeClass::kNone;
      if (!extremal && !recognized) continue;
      const bool agrees = extremal == recognized;
      disagreements += agrees ? 0 : 1;
      if (c.format == "json") {
        json j = {{"n", n}, {"graph6", to_graph6(t)}, {"class", to_string(cls)}, {"oracle", extremal},
                  {"agrees", agrees}};
        buf << j.dump() << '\n';
      } else {
        buf << n << '\t' << to_graph6(t) << '\t' << to_string(cls);
        if (!agrees) buf << "\tDISAGREES oracle=" << (extremal ? "extremal" : "not-extremal");
        buf << '\n';
      }
      if (!agrees) err << "midiso: recognizer disagrees with the oracle on " << to_graph6(t) << '\n';
    }
  }
  emit(c.out, out, [&](std::ostream& os) { os << buf.str(); });
  return disagreements == 0 ? kExitOk : kExitFailureFound;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Isolation in middle graphs: compute invariants, transform, verify claims.", "midiso"};
  app.require_subcommand(1);

  ComputeConfig compute;
  auto* compute_cmd = app.add_subcommand("compute", "Print graph invariants with witnesses");
  compute_cmd->add_option("graph", compute.input, "Generator spec, file, or graph6")->required();
  compute_cmd->add_option("--format", compute.format)->check(CLI::IsMember({"text", "json"}));
  compute_cmd->add_option("--out", compute.out, "Write output here instead of stdout");

  TransformConfig transform;
  auto* transform_cmd = app.add_subcommand("transform", "Emit the middle graph");
  transform_cmd->add_option("graph", transform.input, "Generator spec, file, or graph6")->required();
  transform_cmd->add_option("--format", transform.format, "text is graph6")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  transform_cmd->add_flag("--dot", transform.dot, "Same as --format dot");
  transform_cmd->add_option("--out", transform.out);

  VerifyConfig verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check claims over a tier or on one graph");
  verify_cmd->add_option("graph", verify.input, "Check this graph only; tier options are ignored");
  verify_cmd->add_option("--tier", verify.tier)->check(CLI::IsMember({"exhaustive", "spot", "formulas", "all"}));
  verify_cmd->add_option("--claims", verify.claims, "Comma-separated claim ids (default: all)");
  verify_cmd->add_option("--max-n", verify.max_n, "Largest order of the exhaustive graph sweep");
  verify_cmd->add_option("--max-tree-n", verify.max_tree_n, "Largest order of the exhaustive tree sweep");
  verify_cmd->add_option("--seed", verify.seed, "Base seed of the spot corpus");
  verify_cmd->add_option("--count", verify.count, "Number of random spot graphs");
  verify_cmd->add_option("--format", verify.format)->check(CLI::IsMember({"json", "csv", "text"}));
  verify_cmd->add_option("--out", verify.out);
  verify_cmd->add_option("--summary", verify.summary, "Also write the per-claim CSV tally here");
  verify_cmd->add_option("--parallel", verify.parallel, "Worker threads; 0 uses every core")
      ->check(CLI::Range(0, 256));
  verify_cmd->add_flag("--allow-long", verify.allow_long, "Permit --max-n 7");
  verify_cmd->add_flag("--quiet", verify.quiet, "No progress on stderr");

  EnumerateConfig enumerate;
  auto* enumerate_cmd =
      app.add_subcommand("enumerate-extremal", "List trees attaining the tree upper bound with their class");
  enumerate_cmd->add_option("n", enumerate.n, "Tree order; omit to sweep 3..--max-tree-n")->check(CLI::Range(3, 12));
  enumerate_cmd->add_option("--max-tree-n", enumerate.max_tree_n)->check(CLI::Range(3, 12));
  enumerate_cmd->add_option("--format", enumerate.format)->check(CLI::IsMember({"text", "json"}));
  enumerate_cmd->add_option("--out", enumerate.out);

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("midiso");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (compute_cmd->parsed()) return cmd_compute(compute, out, err);
    if (transform_cmd->parsed()) return cmd_transform(transform, out);
    if (verify_cmd->parsed()) return cmd_verify(verify, out, err);
    return cmd_enumerate_extremal(enumerate, out, err);
  } catch (const CapacityError& e) {
    err << "midiso: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const ParseError& e) {
    err << "midiso: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "midiso: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GenerationError& e) {
    err << "midiso: " << e.what() << '\n';
    return kExitUsage;
  } catch (const OutputError& e) {
    err << "midiso: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace midiso::cli
