#pragma once

#include "tjkernel/graph.hpp"

namespace tjk {

/// Exhaustive K_{3,r}-minor test for small graphs. Throws std::invalid_argument
/// when g has more than n_limit vertices (the search is exponential).
bool check_k3r_minor_small(const Graph& g, int r, int n_limit = 12);

}  // namespace tjk
