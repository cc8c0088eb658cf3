#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tjkernel/anticomplete.hpp"
#include "tjkernel/coloring.hpp"
#include "tjkernel/greedy.hpp"
#include "tjkernel/kernel.hpp"
#include "tjkernel/projection.hpp"

namespace tjk {

struct CleanSet {
  std::vector<Vertex> I;
  CleanClassification source;
  CleanClassification target;
  TrimStatus trim_status = TrimStatus::Ok;
  int pool_size = 0;  // |I_0|
  int candidates_tried = 0;
};

/// Searches I_0 (maximum independent subsets of the anticomplete-trimmed
/// 2-classes) for a set of size at most 2k that is clean for both sides.
std::optional<CleanSet> find_clean_set(const Instance& inst, const ProjectionDecomposition& dec,
                                       const RotationSystem& rot, const GreedyLimits& limits = {});

/// Volume test: q 2-classes with a key outside `tokens` whose union has at
/// least 2q + 2k members (q >= 1).
bool sufficient_greedy_by_volume(const ProjectionDecomposition& dec, const std::vector<Vertex>& tokens, int k);

/// 2-classes with both keys among `tokens`, in ascending key order.
std::vector<TwoClassRef> locked_classes(const ProjectionDecomposition& dec, const std::vector<Vertex>& tokens);

/// Tokens keying a locked class of size >= 7 or two locked classes of size >= 5.
std::vector<Vertex> important_vertices(const ProjectionDecomposition& dec, const std::vector<Vertex>& tokens);

enum class ClassColor { Blue, Red, Uncolored };
const char* to_string(ClassColor c);

struct ClassColoring {
  std::map<std::vector<Vertex>, ClassColor> color;  // every locked class
  std::vector<Vertex> important;

  ClassColor of(Vertex x, Vertex y) const;
};

/// Blue (>= 7) / Red (5..6) initial colouring of the locked classes, then
/// colours are dropped in ascending key order while every important vertex
/// keeps one Blue or two Red classes, until nothing changes.
/// Throws std::logic_error if the fixpoint breaks the coverage invariants.
ClassColoring color_removal(const ProjectionDecomposition& dec, const std::vector<Vertex>& tokens,
                            const std::vector<Vertex>& important);

struct RuleOutcome {
  Instance instance;
  int rule1_deleted = 0;
  int rule2_deleted = 0;
  int rule3_deleted = 0;
};

/// Rule 1: uncoloured classes of size >= 5 with both keys important keep only I.
/// Rule 2 / Rule 3: Blue / Red classes keep I plus 7 / 5 more (lowest ids).
RuleOutcome apply_reduction_rules(const Instance& inst, const ProjectionDecomposition& dec,
                                  const std::vector<Vertex>& I, const ClassColoring& coloring);

class StrictBoundViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PlanarOptions {
  bool strict = false;
  const ColoringResult* coloring = nullptr;
  GreedyLimits limits;
};

/// The planar pipeline. Needs a rotation system that passes validation.
KernelResult build_kernel_planar(const Instance& inst, const PlanarOptions& opts = {});

/// |V \ N[tokens]|: vertices that are neither tokens nor adjacent to one.
int free_vertex_count(const Graph& g, const std::vector<Vertex>& tokens);

}  // namespace tjk
