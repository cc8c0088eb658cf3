#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tjkernel/graph.hpp"

namespace tjk {

/// Directed copy of an edge. The face to the left of `from -> to` is traced
/// by repeatedly stepping to `to -> succ_to(from)`.
struct Dart {
  Vertex from = 0;
  Vertex to = 0;
  friend bool operator==(const Dart&, const Dart&) = default;
};

/// Read-only view of a rotation system with O(log deg) successor queries.
class Embedding {
 public:
  explicit Embedding(const RotationSystem& rot);

  int n() const { return static_cast<int>(rot_.order.size()); }
  const std::vector<Vertex>& rotation(Vertex v) const { return rot_.order[static_cast<std::size_t>(v)]; }

  /// Index of u in rotation(v); -1 if absent.
  int position(Vertex v, Vertex u) const;
  Vertex succ(Vertex v, Vertex u) const;
  Vertex pred(Vertex v, Vertex u) const;
  Dart next_in_face(Dart d) const { return {d.to, succ(d.to, d.from)}; }

  /// All faces as closed dart cycles, in order of first dart (by tail, then rotation index).
  /// Throws std::invalid_argument when the rotation is not symmetric.
  std::vector<std::vector<Dart>> faces() const;

  /// Face index of every dart, aligned with faces(); indexed [v][position].
  std::vector<std::vector<int>> dart_faces(const std::vector<std::vector<Dart>>& faces) const;

 private:
  RotationSystem rot_;
  std::vector<std::vector<std::pair<Vertex, int>>> index_;
};

struct EmbeddingReport {
  bool accepted = false;
  int vertices = 0;
  std::size_t edges = 0;
  int faces = 0;
  int components = 0;
  std::string message;
};

/// Euler check on the traced faces: accepted iff V - E + F = 1 + #components,
/// with the outer faces of different components identified.
/// Throws std::invalid_argument if a rotation is not a permutation of N(v).
EmbeddingReport validate_rotation_system(const Graph& g, const RotationSystem& rot);

/// Rotation system of the subgraph induced by `keep` (ids unchanged; dropped vertices get empty rotations).
RotationSystem restrict_rotation(const RotationSystem& rot, const VertexSet& keep);

/// Incremental plane-graph builder; every insertion happens inside an existing face.
class EmbeddingBuilder {
 public:
  explicit EmbeddingBuilder(int n = 0);
  /// Continues from an existing (planar) rotation system.
  explicit EmbeddingBuilder(RotationSystem rot) : rot_(std::move(rot)) {}

  Vertex add_vertex();
  int n() const { return static_cast<int>(rot_.order.size()); }

  /// Inserts u-v with v placed right after `after_u` in rot(u) (ignored when rot(u) is empty)
  /// and u right after `after_v` in rot(v).
  void add_edge_at(Vertex u, Vertex after_u, Vertex v, Vertex after_v);

  /// Inserts u-v inside a face incident to both. When `hint` is given the face
  /// containing that dart is used. Throws std::logic_error if no such face exists.
  void add_edge_in_face(Vertex u, Vertex v, std::optional<Dart> hint = std::nullopt);

  /// New vertex joined to `attach` (in order) inside one face; the first edge
  /// goes into the face containing `hint` when given.
  Vertex add_vertex_in_face(const std::vector<Vertex>& attach, std::optional<Dart> hint = std::nullopt);

  const RotationSystem& rotation() const { return rot_; }
  Graph graph() const;

 private:
  RotationSystem rot_;
};

}  // namespace tjk
