#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tjkernel/coloring.hpp"
#include "tjkernel/kernel.hpp"
#include "tjkernel/projection.hpp"

namespace tjk {

struct ConstructionPlan {
  enum class Action { KeepOnlyI, KeepIndep2r };
  struct BigClass {
    TwoClassRef cls;
    Action action = Action::KeepOnlyI;
    int pool_hits = 0;           // |C_Y ∩ I| before any removal
    std::vector<Vertex> kept;    // members surviving in G'
  };

  int initial_pool_size = 0;
  std::vector<Vertex> helpful_pool;  // I after the KeepIndep2r removals
  std::vector<BigClass> big_classes;
  std::vector<TwoClassRef> small_classes;
};

const char* to_string(ConstructionPlan::Action a);

/// Tries to certify a yes-instance through an independent k-subset of C1.
/// Returns a verified sequence from the source to the target set, or nullopt.
std::optional<ReconfSequence> check_trivial_yes_c1(const Instance& inst, const ProjectionDecomposition& dec,
                                                   const ColoringResult& col);

/// Big/small split and per-class actions; nullopt when step (1) applies.
std::optional<ConstructionPlan> plan_construction(const Instance& inst, const ProjectionDecomposition& dec,
                                                  const ColoringResult& col, int r);

/// The K_{3,r}-minor-free kernel. `col` overrides the computed coloring.
KernelResult build_kernel_general(const Instance& inst, int r, const ColoringResult* col = nullptr);

/// Upper bound on the kernel order: 42k for planar graphs, otherwise the
/// general closed formula evaluated exactly.
boost::multiprecision::cpp_int theoretical_size_bound(int r, int k, bool planar);

/// |C1| + |C3| bound: 12k for planar graphs, else k(max{r,6300} + 3 + (r-1) 2^{5r+13} (r+3)^{2r+5}).
boost::multiprecision::cpp_int c1_c3_bound(int r, int k, bool planar);

/// 2^{5r+13} (r+3)^{2r+5}: the per-k bound on N2 + N3 for K_{3,r}-minor-free graphs.
boost::multiprecision::cpp_int class_count_bound(int r);

}  // namespace tjk
