#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "tjkernel/graph.hpp"

namespace tjk {

struct DegeneracyOrder {
  std::vector<Vertex> order;  // reverse elimination order
  int degeneracy = 0;
};

struct ColoringResult {
  std::vector<Vertex> order;
  int degeneracy = 0;
  std::vector<int> color_of;
  int color_count = 0;
};

/// Repeatedly removes a minimum-degree vertex (smallest id on ties).
DegeneracyOrder degeneracy_order(const Graph& g);

/// First-fit coloring along `order`; throws std::invalid_argument unless
/// `order` is a permutation of V(g). `degeneracy` is copied into the result.
ColoringResult greedy_color(const Graph& g, const std::vector<Vertex>& order, int degeneracy = 0);

/// First-fit along a reverse degeneracy order.
ColoringResult degeneracy_coloring(const Graph& g);

/// Largest colour class of G[pool] truncated to `target` (lowest ids first),
/// or nullopt when that class is smaller than `target`. With `coloring`
/// the pool inherits those colours; otherwise G[pool] is coloured afresh.
std::optional<std::vector<Vertex>> extract_independent(const Graph& g, const std::vector<Vertex>& pool, int target,
                                                       const ColoringResult* coloring = nullptr);

/// Number of distinct colours used on `pool` (by `coloring`, or by a fresh
/// degeneracy coloring of G[pool] when null).
int pool_color_count(const Graph& g, const std::vector<Vertex>& pool, const ColoringResult* coloring = nullptr);

bool is_proper_coloring(const Graph& g, const std::vector<int>& color_of);

/// Reads `col <v> <color>` lines (1-indexed vertices). Throws ParseError on
/// malformed or missing entries and std::invalid_argument if not proper.
ColoringResult parse_coloring(std::istream& in, const Graph& g);

}  // namespace tjk
