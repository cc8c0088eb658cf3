#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "tjkernel/graph.hpp"

namespace tjk {

/// A class whose members see exactly the two key vertices {x, y} (x < y) inside X.
struct TwoClassRef {
  Vertex x = 0;
  Vertex y = 0;
  std::vector<Vertex> members;

  bool has_key(Vertex v) const { return v == x || v == y; }
  friend bool operator==(const TwoClassRef&, const TwoClassRef&) = default;
};

/// Partition of V \ X by X-neighbourhood.
struct ProjectionDecomposition {
  VertexSet X;
  /// Keyed by the sorted X-neighbourhood; iteration is ascending key order.
  std::map<std::vector<Vertex>, std::vector<Vertex>> classes;
  VertexSet c1_vertices;
  VertexSet c2_vertices;
  VertexSet c3_vertices;
  int n2 = 0;
  int n3 = 0;

  std::vector<TwoClassRef> two_classes() const;
  /// Members of C_Y, or nullptr when C_Y is empty.
  const std::vector<Vertex>* find(const std::vector<Vertex>& key) const;
};

ProjectionDecomposition compute_projection(const Graph& g, const VertexSet& X);
ProjectionDecomposition compute_projection(const Instance& inst);

enum class LockStatus { Locked, Unlocked };

/// Locked iff both key vertices of `cls` carry a token. Throws
/// std::invalid_argument when `cls` is not a 2-class of `dec`.
LockStatus locked_status(const ProjectionDecomposition& dec, const TwoClassRef& cls, const VertexSet& tokens);

/// Raised when a 2-class cannot occur in a planar graph.
class EmbeddingClassViolation : public std::runtime_error {
 public:
  EmbeddingClassViolation(Vertex witness, const std::string& what)
      : std::runtime_error(what), witness_(witness) {}
  Vertex witness() const { return witness_; }

 private:
  Vertex witness_;
};

struct TwoClassStructure {
  enum class Kind { Cycle, PathUnion };
  Kind kind = Kind::PathUnion;
  std::vector<Vertex> max_independent_subset;
};

/// Shape of G[members] for a 2-class of a planar graph: a spanning cycle or a
/// disjoint union of paths, plus a maximum independent subset of it.
/// Throws EmbeddingClassViolation for a member with three in-class neighbours
/// or a cycle that does not span the class.
TwoClassStructure two_class_structure(const Graph& g, const std::vector<Vertex>& members);

/// Maximum independent subset of a vertex set inducing paths and cycles only.
/// Throws EmbeddingClassViolation if some vertex has degree >= 3 inside `members`.
std::vector<Vertex> max_independent_paths_cycles(const Graph& g, const std::vector<Vertex>& members);

}  // namespace tjk
