#include "midiso/canonical.hpp"

#include <algorithm>
#include <functional>

namespace midiso {

namespace {

using Cells = std::vector<std::vector<int>>;

// Centre-rooted parenthesis encoding; two centres give an edge-rooted code.
std::string tree_code(const Graph& t) {
  const int n = t.order();
  if (n == 1) return "()";
  std::vector<int> deg(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = t.adjacency(v).size();
  VertexSet alive = t.vertices();
  VertexSet layer = leaves(t);
  while (alive.size() > 2) {
    alive -= layer;
    VertexSet next;
    layer.for_each([&](int leaf) {
      (t.adjacency(leaf) & alive).for_each([&](int p) {
        if (--deg[static_cast<std::size_t>(p)] == 1) next.insert(p);
      });
    });
    layer = next;
  }

  std::function<std::string(int, int)> encode = [&](int v, int parent) {
    std::vector<std::string> kids;
    t.adjacency(v).for_each([&](int w) {
      if (w != parent) kids.push_back(encode(w, v));
    });
    std::sort(kids.begin(), kids.end());
    std::string out = "(";
    for (const auto& k : kids) out += k;
    return out + ")";
  };

  std::vector<int> centres = alive.members();
  if (centres.size() == 1) return encode(centres[0], -1);
  std::string a = encode(centres[0], centres[1]);
  std::string b = encode(centres[1], centres[0]);
  if (b < a) std::swap(a, b);
  return "[" + a + b + "]";
}

VertexSet as_set(const std::vector<int>& cell) {
  VertexSet s;
  for (int v : cell) s.insert(v);
  return s;
}

// Splits cells by neighbour counts into splitter cells until the partition is
// equitable. The split chosen and the order of the pieces depend only on
// counts, so the resulting cell sequence is label-invariant.
void refine(const Graph& g, Cells& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
      VertexSet splitter = as_set(cells[s]);
      for (std::size_t c = 0; c < cells.size() && !changed; ++c) {
        auto& cell = cells[c];
        if (cell.size() < 2) continue;
        auto count = [&](int v) { return (g.adjacency(v) & splitter).size(); };
        int first = count(cell.front());
        if (std::all_of(cell.begin(), cell.end(), [&](int v) { return count(v) == first; })) continue;
        std::vector<std::pair<int, int>> keyed;
        for (int v : cell) keyed.emplace_back(count(v), v);
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        Cells pieces;
        for (std::size_t i = 0; i < keyed.size(); ++i) {
          if (i == 0 || keyed[i].first != keyed[i - 1].first) pieces.emplace_back();
          pieces.back().push_back(keyed[i].second);
        }
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), pieces.begin(), pieces.end());
        changed = true;
      }
    }
  }
}

// Adjacency between cells depends only on the cells: every ordering inside
// the cells yields the same matrix.
bool homogeneous(const Graph& g, const Cells& cells) {
  for (const auto& a : cells) {
    for (const auto& b : cells) {
      VertexSet bs = as_set(b);
      int full = static_cast<int>(b.size()) - (&a == &b ? 1 : 0);
      for (int v : a) {
        int cnt = (g.adjacency(v) & bs).size();
        if (cnt != 0 && cnt != full) return false;
      }
    }
  }
  return true;
}

std::vector<std::uint64_t> matrix_in_order(const Graph& g, const Cells& cells) {
  std::vector<int> order;
  for (const auto& cell : cells) order.insert(order.end(), cell.begin(), cell.end());
  std::vector<std::uint64_t> rows(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::uint64_t row = 0;
    for (std::size_t j = 0; j < order.size(); ++j) {
      if (g.adjacent(order[i], order[j])) row |= std::uint64_t{1} << j;
    }
    rows[i] = row;
  }
  return rows;
}

void search(const Graph& g, Cells cells, std::vector<std::uint64_t>& best, bool& have_best) {
  refine(g, cells);
  auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
  if (target == cells.end() || homogeneous(g, cells)) {
    auto rows = matrix_in_order(g, cells);
    if (!have_best || rows < best) {
      best = std::move(rows);
      have_best = true;
    }
    return;
  }
  const std::size_t at = static_cast<std::size_t>(target - cells.begin());
  const std::vector<int> cell = cells[at];
  for (int v : cell) {
    Cells branch = cells;
    std::vector<int> rest;
    for (int w : cell) {
      if (w != v) rest.push_back(w);
    }
    branch[at] = {v};
    branch.insert(branch.begin() + static_cast<std::ptrdiff_t>(at) + 1, rest);
    search(g, std::move(branch), best, have_best);
  }
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d;
  for (int v = 0; v < g.order(); ++v) d.push_back(g.adjacency(v).size());
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  CanonicalForm form;
  form.order_ = g.order();
  if (is_tree(g)) {
    form.tree_code_ = tree_code(g);
    return form;
  }
  if (g.order() == 0) return form;
  bool have_best = false;
  Cells initial{g.vertices().members()};
  search(g, std::move(initial), form.rows_, have_best);
  return form;
}

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  if (degree_sequence(g) != degree_sequence(h)) return false;
  return canonical_form(g) == canonical_form(h);
}

}  // namespace midiso
