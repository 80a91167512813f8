#include "midiso/graph_io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace midiso {

namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_int(std::string_view tok, int& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

[[noreturn]] void fail_line(int line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<Graph> g;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    auto toks = split_ws(line);
    if (!g) {
      int n = 0;
      if (toks.size() != 1 || !parse_int(toks[0], n)) fail_line(line_no, "expected a vertex count");
      if (n < 0) fail_line(line_no, "negative vertex count");
      if (n > kMaxVertices) fail_line(line_no, "vertex count exceeds 64");
      g.emplace(n);
      continue;
    }
    int u = 0;
    int v = 0;
    if (toks.size() != 2 || !parse_int(toks[0], u) || !parse_int(toks[1], v)) {
      fail_line(line_no, "expected \"u v\"");
    }
    if (u < 0 || v < 0 || u >= g->order() || v >= g->order()) fail_line(line_no, "vertex index out of range");
    if (u == v) fail_line(line_no, "self-loop");
    g->add_edge(u, v);
  }
  if (!g) throw ParseError("line 1: empty input");
  return *g;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

Graph parse_graph6(std::string_view text) {
  std::string_view s = trim(text);
  constexpr std::string_view header = ">>graph6<<";
  if (s.starts_with(header)) s.remove_prefix(header.size());
  if (s.empty()) throw ParseError("graph6: empty input");
  for (char c : s) {
    if (c < 63 || c > 126) throw ParseError("graph6: invalid character '" + std::string(1, c) + "'");
  }

  std::size_t at = 0;
  long n = 0;
  if (s[0] != 126) {
    n = s[0] - 63;
    at = 1;
  } else {
    if (s.size() < 4 || s[1] == 126) throw ParseError("graph6: unsupported or truncated size prefix");
    n = ((s[1] - 63) << 12) | ((s[2] - 63) << 6) | (s[3] - 63);
    at = 4;
  }
  if (n > kMaxVertices) throw ParseError("graph6: " + std::to_string(n) + " vertices exceeds the cap of 64");

  const long bits = n * (n - 1) / 2;
  const std::size_t expected = static_cast<std::size_t>((bits + 5) / 6);
  if (s.size() - at != expected) {
    throw ParseError("graph6: payload has " + std::to_string(s.size() - at) + " characters, expected " +
                     std::to_string(expected));
  }

  Graph g(static_cast<int>(n));
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int chunk = s[at + static_cast<std::size_t>(k / 6)] - 63;
      if ((chunk >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (k % 6 != 0) {
    int chunk = s.back() - 63;
    if ((chunk & ((1 << (6 - k % 6)) - 1)) != 0) throw ParseError("graph6: nonzero padding bits");
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  std::string out;
  const int n = g.order();
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int chunk = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
  return out;
}

std::string to_dot(const Graph& g, std::string_view name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int v = 0; v < g.order(); ++v) os << "  " << v << " [label=\"" << v << "\"];\n";
  for (const Edge& e : g.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace midiso
