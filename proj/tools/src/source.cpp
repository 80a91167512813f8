#include "midiso/cli/source.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "midiso/errors.hpp"
#include "midiso/generators.hpp"
#include "midiso/graph_io.hpp"

namespace midiso::cli {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

int parse_int(std::string_view text, std::string_view spec) {
  int value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw ParseError("bad integer '" + std::string(text) + "' in generator spec '" + std::string(spec) + "'");
  }
  return value;
}

std::vector<int> parse_args(std::string_view args, std::string_view spec) {
  std::vector<int> out;
  for (;;) {
    const auto comma = args.find(',');
    out.push_back(parse_int(args.substr(0, comma), spec));
    if (comma == std::string_view::npos) return out;
    args.remove_prefix(comma + 1);
  }
}

Graph from_generator(std::string_view name, std::string_view args, std::string_view spec) {
  const std::vector<int> a = parse_args(args, spec);
  auto want = [&](std::size_t count) {
    if (a.size() != count) {
      throw ParseError("generator '" + std::string(name) + "' takes " + std::to_string(count) + " argument(s)");
    }
  };
  if (name == "kbip") {
    want(2);
    return complete_bipartite(a[0], a[1]);
  }
  want(1);
  if (name == "path") return path(a[0]);
  if (name == "cycle") return cycle(a[0]);
  if (name == "complete") return complete(a[0]);
  if (name == "star") return star(a[0]);
  if (name == "spider") return spider_t1(a[0]);
  if (name == "matching") return perfect_matching_graph(a[0]);
  if (name == "edgeless") return edgeless(a[0]);
  throw ParseError("unknown generator '" + std::string(name) + "'");
}

bool all_digits(std::string_view s) { return s.find_first_not_of("0123456789") == std::string_view::npos; }

}  // namespace

Graph parse_graph_text(std::string_view text) {
  const std::string_view body = trim(text);
  if (body.empty()) throw ParseError("empty graph input");
  if (body.find_first_of(" \t\r\n") == std::string_view::npos && !all_digits(body)) return parse_graph6(body);
  return parse_edge_list(body);
}

Graph resolve_graph(std::string_view arg) {
  arg = trim(arg);
  if (arg.empty()) throw ParseError("empty graph argument");
  // ':' lies outside the graph6 alphabet, so specs and graph6 never collide.
  if (const auto colon = arg.find(':'); colon != std::string_view::npos && !std::filesystem::exists(arg)) {
    return from_generator(arg.substr(0, colon), arg.substr(colon + 1), arg);
  }
  const std::filesystem::path file{std::string(arg)};
  if (std::filesystem::is_regular_file(file)) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw ParseError("cannot read '" + file.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph_text(buf.str());
  }
  return parse_graph6(arg);
}

}  // namespace midiso::cli
