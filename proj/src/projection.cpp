#include "tjkernel/projection.hpp"

#include <algorithm>

namespace tjk {

std::vector<TwoClassRef> ProjectionDecomposition::two_classes() const {
  std::vector<TwoClassRef> out;
  for (const auto& [key, members] : classes)
    if (key.size() == 2) out.push_back({key[0], key[1], members});
  return out;
}

const std::vector<Vertex>* ProjectionDecomposition::find(const std::vector<Vertex>& key) const {
  auto it = classes.find(key);
  return it == classes.end() ? nullptr : &it->second;
}

ProjectionDecomposition compute_projection(const Graph& g, const VertexSet& X) {
  ProjectionDecomposition dec;
  dec.X = X;
  dec.c1_vertices = g.empty_set();
  dec.c2_vertices = g.empty_set();
  dec.c3_vertices = g.empty_set();
  for (Vertex v = 0; v < g.n(); ++v) {
    if (X.contains(v)) continue;
    std::vector<Vertex> key = (g.neighbor_set(v) & X).to_vector();
    if (key.size() <= 1)
      dec.c1_vertices.insert(v);
    else if (key.size() == 2)
      dec.c2_vertices.insert(v);
    else
      dec.c3_vertices.insert(v);
    dec.classes[std::move(key)].push_back(v);
  }
  for (const auto& [key, members] : dec.classes) {
    if (key.size() == 2) ++dec.n2;
    if (key.size() >= 3) ++dec.n3;
  }
  return dec;
}

ProjectionDecomposition compute_projection(const Instance& inst) {
  return compute_projection(inst.graph, inst.key_set());
}

LockStatus locked_status(const ProjectionDecomposition& dec, const TwoClassRef& cls, const VertexSet& tokens) {
  const auto* members = dec.find({cls.x, cls.y});
  if (!members || *members != cls.members) throw std::invalid_argument("class is not a 2-class of this decomposition");
  return tokens.contains(cls.x) && tokens.contains(cls.y) ? LockStatus::Locked : LockStatus::Unlocked;
}

namespace {

struct Components {
  std::vector<std::vector<Vertex>> walks;  // each path listed end to end, cycles in cyclic order
  std::vector<bool> is_cycle;
};

Components path_cycle_components(const Graph& g, const std::vector<Vertex>& members) {
  VertexSet in = g.make_set(members);
  for (Vertex v : members) {
    if ((g.neighbor_set(v) & in).size() >= 3)
      throw EmbeddingClassViolation(v, "vertex " + std::to_string(v + 1) + " has three neighbours inside its 2-class");
  }
  Components out;
  VertexSet seen = g.empty_set();
  auto walk_from = [&](Vertex start) {
    std::vector<Vertex> walk{start};
    seen.insert(start);
    Vertex prev = -1, cur = start;
    while (true) {
      Vertex nxt = -1;
      (g.neighbor_set(cur) & in).for_each([&](Vertex w) {
        if (w != prev && !seen.contains(w) && nxt < 0) nxt = w;
      });
      if (nxt < 0) break;
      seen.insert(nxt);
      walk.push_back(nxt);
      prev = cur;
      cur = nxt;
    }
    return walk;
  };
  // Paths first, started from an endpoint.
  for (Vertex v : members)
    if (!seen.contains(v) && (g.neighbor_set(v) & in).size() <= 1) {
      out.walks.push_back(walk_from(v));
      out.is_cycle.push_back(false);
    }
  for (Vertex v : members)
    if (!seen.contains(v)) {
      out.walks.push_back(walk_from(v));
      out.is_cycle.push_back(true);
    }
  return out;
}

}  // namespace

std::vector<Vertex> max_independent_paths_cycles(const Graph& g, const std::vector<Vertex>& members) {
  Components comps = path_cycle_components(g, members);
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < comps.walks.size(); ++i) {
    const auto& w = comps.walks[i];
    // Alternate from one end; a cycle drops its last vertex when odd.
    std::size_t limit = comps.is_cycle[i] && w.size() % 2 == 1 ? w.size() - 1 : w.size();
    for (std::size_t j = 0; j < limit; j += 2) out.push_back(w[j]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

TwoClassStructure two_class_structure(const Graph& g, const std::vector<Vertex>& members) {
  Components comps = path_cycle_components(g, members);
  TwoClassStructure out;
  bool has_cycle = std::find(comps.is_cycle.begin(), comps.is_cycle.end(), true) != comps.is_cycle.end();
  if (has_cycle) {
    if (comps.walks.size() != 1)
      throw EmbeddingClassViolation(comps.walks.front().front(), "2-class contains a cycle that does not span it");
    out.kind = TwoClassStructure::Kind::Cycle;
  }
  out.max_independent_subset = max_independent_paths_cycles(g, members);
  return out;
}

}  // namespace tjk
