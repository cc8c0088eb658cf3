#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tjkernel/graph.hpp"

namespace tjk {

struct SolveLimits {
  std::uint64_t max_states = 5'000'000;
  std::int64_t max_millis = 60'000;
};

enum class SolveVerdict { Yes, No, ResourceLimit };

struct SolveOutcome {
  SolveVerdict verdict = SolveVerdict::No;
  ReconfSequence sequence;  // shortest, only for Yes
  std::uint64_t states_explored = 0;

  std::size_t length() const { return sequence.size(); }
};

const char* to_string(SolveVerdict v);

/// Breadth-first search over size-k independent sets starting at the source set.
SolveOutcome solve_bfs(const Instance& inst, const SolveLimits& limits = {});

struct VerifyReport {
  bool ok = false;
  /// 1-based index of the offending jump; size()+1 when every jump is legal
  /// but the final set is not the target; 0 when ok.
  std::size_t failing_step = 0;
  std::string message;

  explicit operator bool() const { return ok; }
};

VerifyReport verify_sequence(const Instance& inst, const ReconfSequence& seq);

/// Ground truth for greedy orderings: tries every ordering pair of A and B.
/// Throws std::invalid_argument unless |A| == |B| <= 6.
bool greedy_oracle(const Graph& g, const std::vector<Vertex>& A, const std::vector<Vertex>& B);

}  // namespace tjk
