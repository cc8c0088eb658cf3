#include "tjkernel/coloring.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>
#include <string>

namespace tjk {

DegeneracyOrder degeneracy_order(const Graph& g) {
  const int n = g.n();
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::set<std::pair<int, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    deg[static_cast<std::size_t>(v)] = g.degree(v);
    queue.emplace(deg[static_cast<std::size_t>(v)], v);
  }
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  DegeneracyOrder out;
  while (!queue.empty()) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    removed[static_cast<std::size_t>(v)] = 1;
    out.degeneracy = std::max(out.degeneracy, d);
    out.order.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (removed[static_cast<std::size_t>(w)]) continue;
      queue.erase({deg[static_cast<std::size_t>(w)], w});
      queue.emplace(--deg[static_cast<std::size_t>(w)], w);
    }
  }
  std::reverse(out.order.begin(), out.order.end());
  return out;
}

ColoringResult greedy_color(const Graph& g, const std::vector<Vertex>& order, int degeneracy) {
  const int n = g.n();
  if (static_cast<int>(order.size()) != n) throw std::invalid_argument("order is not a permutation of V");
  std::vector<char> placed(static_cast<std::size_t>(n), 0);
  for (Vertex v : order) {
    if (!g.valid(v) || placed[static_cast<std::size_t>(v)]) throw std::invalid_argument("order is not a permutation of V");
    placed[static_cast<std::size_t>(v)] = 1;
  }
  ColoringResult out;
  out.order = order;
  out.degeneracy = degeneracy;
  out.color_of.assign(static_cast<std::size_t>(n), -1);
  std::vector<char> used;
  for (Vertex v : order) {
    used.assign(static_cast<std::size_t>(out.color_count) + 1, 0);
    for (Vertex w : g.neighbors(v)) {
      int c = out.color_of[static_cast<std::size_t>(w)];
      if (c >= 0) used[static_cast<std::size_t>(c)] = 1;
    }
    int c = 0;
    while (used[static_cast<std::size_t>(c)]) ++c;
    out.color_of[static_cast<std::size_t>(v)] = c;
    out.color_count = std::max(out.color_count, c + 1);
  }
  return out;
}

ColoringResult degeneracy_coloring(const Graph& g) {
  auto d = degeneracy_order(g);
  return greedy_color(g, d.order, d.degeneracy);
}

namespace {

// Colour classes of `pool` (sorted by vertex id inside each class).
std::vector<std::vector<Vertex>> pool_classes(const Graph& g, const std::vector<Vertex>& pool,
                                              const ColoringResult* coloring) {
  std::vector<Vertex> sorted = pool;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> colors(sorted.size());
  if (coloring) {
    for (std::size_t i = 0; i < sorted.size(); ++i) colors[i] = coloring->color_of[static_cast<std::size_t>(sorted[i])];
  } else {
    Graph h = g.induced(sorted);
    auto local = degeneracy_coloring(h);
    for (std::size_t i = 0; i < sorted.size(); ++i) colors[i] = local.color_of[i];
  }
  std::vector<std::vector<Vertex>> classes;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    auto c = static_cast<std::size_t>(colors[i]);
    if (classes.size() <= c) classes.resize(c + 1);
    classes[c].push_back(sorted[i]);
  }
  classes.erase(std::remove_if(classes.begin(), classes.end(), [](const auto& c) { return c.empty(); }), classes.end());
  return classes;
}

}  // namespace

std::optional<std::vector<Vertex>> extract_independent(const Graph& g, const std::vector<Vertex>& pool, int target,
                                                       const ColoringResult* coloring) {
  if (target <= 0) return std::vector<Vertex>{};
  auto classes = pool_classes(g, pool, coloring);
  const std::vector<Vertex>* best = nullptr;
  for (const auto& c : classes)
    if (!best || c.size() > best->size()) best = &c;
  if (!best || static_cast<int>(best->size()) < target) return std::nullopt;
  return std::vector<Vertex>(best->begin(), best->begin() + target);
}

int pool_color_count(const Graph& g, const std::vector<Vertex>& pool, const ColoringResult* coloring) {
  return static_cast<int>(pool_classes(g, pool, coloring).size());
}

bool is_proper_coloring(const Graph& g, const std::vector<int>& color_of) {
  if (static_cast<int>(color_of.size()) != g.n()) return false;
  for (auto [u, v] : g.edges())
    if (color_of[static_cast<std::size_t>(u)] == color_of[static_cast<std::size_t>(v)]) return false;
  return true;
}

ColoringResult parse_coloring(std::istream& in, const Graph& g) {
  ColoringResult out;
  out.color_of.assign(static_cast<std::size_t>(g.n()), -1);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::string tag;
    if (!(ss >> tag) || tag == "c") continue;
    if (tag != "col") throw ParseError(lineno, "expected 'col <v> <color>'");
    long long v, c;
    if (!(ss >> v >> c)) throw ParseError(lineno, "expected 'col <v> <color>'");
    if (v < 1 || v > g.n()) throw ParseError(lineno, "vertex out of range");
    if (c < 0) throw ParseError(lineno, "negative colour");
    if (out.color_of[static_cast<std::size_t>(v - 1)] >= 0) throw ParseError(lineno, "vertex coloured twice");
    out.color_of[static_cast<std::size_t>(v - 1)] = static_cast<int>(c);
  }
  for (Vertex v = 0; v < g.n(); ++v)
    if (out.color_of[static_cast<std::size_t>(v)] < 0)
      throw ParseError(lineno, "vertex " + std::to_string(v + 1) + " has no colour");
  if (!is_proper_coloring(g, out.color_of)) throw std::invalid_argument("supplied coloring is not proper");
  // Compact colour indices so every index below color_count is used.
  std::set<int> used(out.color_of.begin(), out.color_of.end());
  std::vector<int> ids(used.begin(), used.end());
  for (auto& c : out.color_of) c = static_cast<int>(std::lower_bound(ids.begin(), ids.end(), c) - ids.begin());
  out.color_count = static_cast<int>(ids.size());
  for (Vertex v = 0; v < g.n(); ++v) out.order.push_back(v);
  out.degeneracy = degeneracy_order(g).degeneracy;
  return out;
}

}  // namespace tjk
