#pragma once

#include <vector>

#include "tjkernel/graph.hpp"
#include "tjkernel/projection.hpp"

namespace tjk {

enum class TrimStatus { Ok, FallbackUsed, EmbeddingInconsistent };
const char* to_string(TrimStatus s);

struct TrimResult {
  TrimStatus status = TrimStatus::Ok;
  std::vector<std::vector<Vertex>> trimmed;  // aligned with the input classes
  std::vector<std::vector<Vertex>> removed;
};

/// Removes at most two boundary members per class so that the trimmed classes
/// become pairwise anticomplete. The boundary of a class is read from the face
/// of its K_{2,m} sub-embedding that contains a common reference point. With
/// `protect_last` the final class is never trimmed. The outcome is verified;
/// when verification fails an exhaustive search (at most six classes) is tried.
TrimResult anticompleteify(const Graph& g, const std::vector<TwoClassRef>& classes, const RotationSystem& rot,
                           bool protect_last = false);

/// Trims two classes by at most two members each so that both become
/// anticomplete to each other and to the connected set `outside`.
TrimResult anticompleteify_around(const Graph& g, const TwoClassRef& a, const TwoClassRef& b,
                                  const std::vector<Vertex>& outside, const RotationSystem& rot);

struct OutsideTrim {
  std::vector<Vertex> kept;
  std::vector<Vertex> removed;
  bool within_bound = true;  // at most four removals
};

/// Drops the members of `outside` adjacent to a or b (which must already be anticomplete).
OutsideTrim trim_outside_set(const Graph& g, const TwoClassRef& a, const TwoClassRef& b,
                             const std::vector<Vertex>& outside);

bool anticomplete(const Graph& g, const std::vector<Vertex>& a, const std::vector<Vertex>& b);

}  // namespace tjk
