#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "tjkernel/coloring.hpp"
#include "tjkernel/embedding.hpp"
#include "tjkernel/graph.hpp"

namespace tjk::testing {

inline Graph cycle_graph(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, e);
}

inline Graph path_graph(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

inline Graph complete_graph(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

inline Graph complete_bipartite(int a, int b) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < a; ++i)
    for (Vertex j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph::from_edges(a + b, e);
}

// Rotation that lists each vertex's neighbours in ascending order.
inline RotationSystem sorted_rotation(const Graph& g) {
  RotationSystem r;
  for (Vertex v = 0; v < g.n(); ++v) r.order.push_back(g.neighbors(v));
  return r;
}

// Plane cycle 0..n-1: every vertex sees its two neighbours.
inline RotationSystem cycle_rotation(int n) {
  RotationSystem r;
  for (Vertex i = 0; i < n; ++i) r.order.push_back({(i + n - 1) % n, (i + 1) % n});
  return r;
}

// Planar K4 drawn as triangle 0,1,2 with 3 in the middle.
inline RotationSystem k4_rotation() {
  EmbeddingBuilder b(3);
  b.add_edge_in_face(0, 1);
  b.add_edge_in_face(1, 2);
  b.add_edge_in_face(2, 0);
  b.add_vertex_in_face({0, 1, 2});
  return b.rotation();
}

// All subsets of {0..n-1} of size s that are independent in g.
inline std::vector<std::vector<Vertex>> independent_sets(const Graph& g, int s) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> cur;
  auto rec = [&](auto&& self, Vertex from) -> void {
    if (static_cast<int>(cur.size()) == s) {
      out.push_back(cur);
      return;
    }
    for (Vertex v = from; v < g.n(); ++v) {
      if (std::any_of(cur.begin(), cur.end(), [&](Vertex u) { return g.adjacent(u, v); })) continue;
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Proper colouring with at most `colors` colours by DSATUR-ordered backtracking.
// Gives up (returns false) after `budget` assignments.
inline bool exact_coloring(const Graph& g, int colors, ColoringResult& out, long long budget = 5'000'000) {
  const int n = g.n();
  std::vector<int> col(static_cast<std::size_t>(n), -1);
  auto pick = [&]() -> Vertex {
    Vertex best = -1;
    int best_sat = -1, best_deg = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (col[static_cast<std::size_t>(v)] >= 0) continue;
      unsigned mask = 0;
      for (Vertex u : g.neighbors(v))
        if (col[static_cast<std::size_t>(u)] >= 0) mask |= 1u << col[static_cast<std::size_t>(u)];
      int sat = __builtin_popcount(mask), deg = static_cast<int>(g.neighbors(v).size());
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    return best;
  };
  auto rec = [&](auto&& self, int placed) -> bool {
    if (placed == n) return true;
    if (--budget < 0) return false;
    Vertex v = pick();
    for (int c = 0; c < colors; ++c) {
      bool ok = true;
      for (Vertex u : g.neighbors(v))
        if (col[static_cast<std::size_t>(u)] == c) ok = false;
      if (!ok) continue;
      col[static_cast<std::size_t>(v)] = c;
      if (self(self, placed + 1)) return true;
      col[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  };
  if (!rec(rec, 0)) return false;
  out = ColoringResult{};
  out.color_of = col;
  out.color_count = n == 0 ? 0 : *std::max_element(col.begin(), col.end()) + 1;
  return true;
}

}  // namespace tjk::testing
