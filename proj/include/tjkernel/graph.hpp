#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tjkernel/vertex_set.hpp"

namespace tjk {

/// Simple undirected graph with sorted adjacency lists mirrored as bitsets.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  /// Throws std::invalid_argument on loops, duplicates or out-of-range ids.
  static Graph from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

  int n() const { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const { return edge_count_; }

  /// Returns false (and changes nothing) if the edge already exists.
  bool add_edge(Vertex u, Vertex v);

  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  const VertexSet& neighbor_set(Vertex v) const { return bits_[static_cast<std::size_t>(v)]; }
  bool adjacent(Vertex u, Vertex v) const { return bits_[static_cast<std::size_t>(u)].contains(v); }
  int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  bool valid(Vertex v) const { return v >= 0 && v < n(); }

  VertexSet empty_set() const { return VertexSet(static_cast<std::size_t>(n())); }
  VertexSet all() const;
  VertexSet make_set(const std::vector<Vertex>& vs) const;

  /// Union of N(v) over v in s (open neighborhood; may intersect s).
  VertexSet neighborhood(const VertexSet& s) const;

  /// Edges with u < v in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  /// Subgraph induced by `keep` (ascending), relabelled 0..|keep|-1 in that order.
  Graph induced(const std::vector<Vertex>& keep) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<VertexSet> bits_;
  std::size_t edge_count_ = 0;
};

/// Per-vertex cyclic order of neighbours (counter-clockwise by convention).
struct RotationSystem {
  std::vector<std::vector<Vertex>> order;
  friend bool operator==(const RotationSystem&, const RotationSystem&) = default;
};

struct GraphClass {
  enum class Kind { Planar, K3rMinorFree };
  Kind kind = Kind::Planar;
  int r = 3;

  static GraphClass planar() { return {Kind::Planar, 3}; }
  static GraphClass k3r(int r) { return {Kind::K3rMinorFree, r}; }
  bool is_planar() const { return kind == Kind::Planar; }
  friend bool operator==(const GraphClass&, const GraphClass&) = default;
};

struct Jump {
  Vertex from = 0;
  Vertex to = 0;
  friend bool operator==(const Jump&, const Jump&) = default;
};

struct ReconfSequence {
  std::vector<Jump> jumps;
  std::size_t size() const { return jumps.size(); }
  bool empty() const { return jumps.empty(); }
  friend bool operator==(const ReconfSequence&, const ReconfSequence&) = default;
};

/// A token-jumping reconfiguration instance. Token sets are kept sorted.
struct Instance {
  Graph graph;
  std::vector<Vertex> source;
  std::vector<Vertex> target;
  int k = 0;
  GraphClass graph_class;
  std::optional<RotationSystem> embedding;
  std::vector<Vertex> original_ids;

  int n() const { return graph.n(); }
  VertexSet source_set() const { return graph.make_set(source); }
  VertexSet target_set() const { return graph.make_set(target); }
  VertexSet key_set() const { return source_set() | target_set(); }
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Checks the Instance invariants; throws std::invalid_argument.
void validate_instance(const Instance& inst);

/// Builds and validates an instance with identity original ids.
Instance make_instance(Graph g, std::vector<Vertex> source, std::vector<Vertex> target,
                       GraphClass cls, std::optional<RotationSystem> rot = std::nullopt);

Instance parse_instance(std::istream& in);
Instance parse_instance(const std::string& text);
void write_instance(std::ostream& out, const Instance& inst);
std::string serialize_instance(const Instance& inst);

/// Throws std::out_of_range for an invalid vertex id.
bool is_independent(const Graph& g, const std::vector<Vertex>& s);
bool is_independent(const Graph& g, const VertexSet& s);

/// Removes `doomed` (none of which may carry a token) and compacts ids.
Instance delete_vertices(const Instance& inst, const VertexSet& doomed);
Instance delete_vertices(const Instance& inst, const std::vector<Vertex>& doomed);

ReconfSequence parse_sequence(std::istream& in);
void write_sequence(std::ostream& out, const ReconfSequence& seq);

}  // namespace tjk
