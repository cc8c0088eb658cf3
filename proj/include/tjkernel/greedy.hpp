#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "tjkernel/graph.hpp"
#include "tjkernel/projection.hpp"

namespace tjk {

enum class SearchStatus { Found, NotFound, Undecided };

struct GreedyOrder {
  SearchStatus status = SearchStatus::NotFound;
  std::vector<Vertex> i_order;  // tokens in the order they leave
  std::vector<Vertex> j_order;  // where they land, aligned with i_order
};

struct GreedyLimits {
  std::size_t max_tokens = 12;
  std::uint64_t max_states = 2'000'000;
};

/// Exact search for orderings i_1..i_k of A and distinct j_1..j_k of B such that
/// every {j_1..j_t, i_{t+1}..i_k} is an independent set of k distinct vertices.
/// B may be larger than A. Undecided once a guard in `limits` trips.
GreedyOrder check_greedy(const Graph& g, const std::vector<Vertex>& A, const std::vector<Vertex>& B,
                         const GreedyLimits& limits = {});

/// Same search with the vertices of `base` present in every intermediate set.
GreedyOrder check_greedy_from(const Graph& g, const std::vector<Vertex>& base, const std::vector<Vertex>& A,
                              const std::vector<Vertex>& B, const GreedyLimits& limits = {});

enum class Side { Source, Target };
const char* to_string(Side s);
const std::vector<Vertex>& side_tokens(const Instance& inst, Side s);

enum class CleanVerdict { Greedy, ThreeClean, TwoTwoClean, NotClean, Undecided };
const char* to_string(CleanVerdict v);

struct CleanClassification {
  CleanVerdict verdict = CleanVerdict::NotClean;
  std::vector<Vertex> i_order;
  std::vector<Vertex> j_order;
  /// Activation data; unset (-1) for Greedy and NotClean.
  std::array<Vertex, 2> token_pair{-1, -1};
  std::array<Vertex, 2> pool_pair{-1, -1};
  std::vector<Vertex> auxiliary;
  std::optional<TwoClassRef> host;
  std::optional<TwoClassRef> second_host;

  bool clean() const {
    return verdict == CleanVerdict::Greedy || verdict == CleanVerdict::ThreeClean || verdict == CleanVerdict::TwoTwoClean;
  }
};

/// Greedy, 3-clean, (2,2)-clean or not clean for the tokens of `side`.
/// I must be independent; activation pairs are searched in ascending order.
CleanClassification classify_clean(const Instance& inst, const ProjectionDecomposition& dec,
                                   const std::vector<Vertex>& I, Side side, const GreedyLimits& limits = {});

}  // namespace tjk
