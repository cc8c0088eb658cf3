#include "tjkernel/embedding.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tjk {

Embedding::Embedding(const RotationSystem& rot) : rot_(rot) {
  index_.resize(rot_.order.size());
  for (std::size_t v = 0; v < rot_.order.size(); ++v) {
    auto& idx = index_[v];
    const auto& ord = rot_.order[v];
    for (std::size_t i = 0; i < ord.size(); ++i) idx.emplace_back(ord[i], static_cast<int>(i));
    std::sort(idx.begin(), idx.end());
  }
}

int Embedding::position(Vertex v, Vertex u) const {
  const auto& idx = index_[static_cast<std::size_t>(v)];
  auto it = std::lower_bound(idx.begin(), idx.end(), std::make_pair(u, -1));
  if (it == idx.end() || it->first != u) return -1;
  return it->second;
}

Vertex Embedding::succ(Vertex v, Vertex u) const {
  const auto& ord = rotation(v);
  int p = position(v, u);
  if (p < 0) throw std::invalid_argument("dart not present in rotation");
  return ord[static_cast<std::size_t>(p + 1) % ord.size()];
}

Vertex Embedding::pred(Vertex v, Vertex u) const {
  const auto& ord = rotation(v);
  int p = position(v, u);
  if (p < 0) throw std::invalid_argument("dart not present in rotation");
  return ord[static_cast<std::size_t>(p + static_cast<int>(ord.size()) - 1) % ord.size()];
}

std::vector<std::vector<Dart>> Embedding::faces() const {
  for (Vertex v = 0; v < n(); ++v)
    for (Vertex u : rotation(v)) {
      if (u < 0 || u >= n() || position(u, v) < 0)
        throw std::invalid_argument("rotation is not symmetric at edge " + std::to_string(v) + "-" + std::to_string(u));
    }
  std::vector<std::vector<char>> seen(static_cast<std::size_t>(n()));
  for (Vertex v = 0; v < n(); ++v) seen[static_cast<std::size_t>(v)].assign(rotation(v).size(), 0);
  std::size_t total = 0;
  for (Vertex v = 0; v < n(); ++v) total += rotation(v).size();

  std::vector<std::vector<Dart>> out;
  for (Vertex v = 0; v < n(); ++v) {
    for (std::size_t i = 0; i < rotation(v).size(); ++i) {
      if (seen[static_cast<std::size_t>(v)][i]) continue;
      std::vector<Dart> face;
      Dart d{v, rotation(v)[i]};
      while (true) {
        auto& flag = seen[static_cast<std::size_t>(d.from)][static_cast<std::size_t>(position(d.from, d.to))];
        if (flag) break;
        flag = 1;
        face.push_back(d);
        if (face.size() > total) throw std::invalid_argument("face traversal does not close");
        d = next_in_face(d);
      }
      if (!(face.front() == d)) throw std::invalid_argument("face traversal does not close");
      out.push_back(std::move(face));
    }
  }
  return out;
}

std::vector<std::vector<int>> Embedding::dart_faces(const std::vector<std::vector<Dart>>& faces) const {
  std::vector<std::vector<int>> id(static_cast<std::size_t>(n()));
  for (Vertex v = 0; v < n(); ++v) id[static_cast<std::size_t>(v)].assign(rotation(v).size(), -1);
  for (std::size_t f = 0; f < faces.size(); ++f)
    for (const Dart& d : faces[f])
      id[static_cast<std::size_t>(d.from)][static_cast<std::size_t>(position(d.from, d.to))] = static_cast<int>(f);
  return id;
}

namespace {

int count_components(const Graph& g) {
  std::vector<int> parent(static_cast<std::size_t>(g.n()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  int comps = g.n();
  for (auto [u, v] : g.edges()) {
    int a = find(u), b = find(v);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --comps;
    }
  }
  return comps;
}

}  // namespace

EmbeddingReport validate_rotation_system(const Graph& g, const RotationSystem& rot) {
  if (static_cast<int>(rot.order.size()) != g.n())
    throw std::invalid_argument("rotation system does not cover every vertex");
  for (Vertex v = 0; v < g.n(); ++v) {
    std::vector<Vertex> sorted = rot.order[static_cast<std::size_t>(v)];
    std::sort(sorted.begin(), sorted.end());
    if (sorted != g.neighbors(v))
      throw std::invalid_argument("rotation of vertex " + std::to_string(v + 1) + " is not a permutation of its neighbours");
  }
  Embedding emb(rot);
  auto faces = emb.faces();
  EmbeddingReport rep;
  rep.vertices = g.n();
  rep.edges = g.edge_count();
  rep.components = count_components(g);
  int isolated = 0;
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.degree(v) == 0) ++isolated;
  // Per-component face counts share one outer face on the sphere.
  int per_component = static_cast<int>(faces.size()) + isolated;
  rep.faces = rep.components > 0 ? per_component - (rep.components - 1) : 1;
  long long euler = static_cast<long long>(rep.vertices) - static_cast<long long>(rep.edges) + rep.faces;
  rep.accepted = euler == 1 + rep.components;
  rep.message = rep.accepted ? "genus 0" : "Euler characteristic " + std::to_string(euler) + " != " + std::to_string(1 + rep.components);
  return rep;
}

RotationSystem restrict_rotation(const RotationSystem& rot, const VertexSet& keep) {
  RotationSystem out;
  out.order.resize(rot.order.size());
  for (std::size_t v = 0; v < rot.order.size(); ++v) {
    if (!keep.contains(static_cast<Vertex>(v))) continue;
    for (Vertex w : rot.order[v])
      if (keep.contains(w)) out.order[v].push_back(w);
  }
  return out;
}

EmbeddingBuilder::EmbeddingBuilder(int n) { rot_.order.resize(static_cast<std::size_t>(n)); }

Vertex EmbeddingBuilder::add_vertex() {
  rot_.order.emplace_back();
  return static_cast<Vertex>(rot_.order.size() - 1);
}

void EmbeddingBuilder::add_edge_at(Vertex u, Vertex after_u, Vertex v, Vertex after_v) {
  auto place = [](std::vector<Vertex>& ord, Vertex after, Vertex w) {
    if (std::find(ord.begin(), ord.end(), w) != ord.end()) throw std::logic_error("edge already present");
    if (ord.empty()) {
      ord.push_back(w);
      return;
    }
    auto it = std::find(ord.begin(), ord.end(), after);
    if (it == ord.end()) throw std::logic_error("anchor is not a neighbour");
    ord.insert(it + 1, w);
  };
  place(rot_.order[static_cast<std::size_t>(u)], after_u, v);
  place(rot_.order[static_cast<std::size_t>(v)], after_v, u);
}

void EmbeddingBuilder::add_edge_in_face(Vertex u, Vertex v, std::optional<Dart> hint) {
  if (u == v) throw std::logic_error("self-loop");
  auto& ru = rot_.order[static_cast<std::size_t>(u)];
  auto& rv = rot_.order[static_cast<std::size_t>(v)];
  if (ru.empty() || rv.empty()) {
    // An isolated endpoint can be dropped into any corner of the other.
    Vertex au = ru.empty() ? -1 : ru.front();
    Vertex av = rv.empty() ? -1 : rv.front();
    if (!ru.empty() && hint && hint->to == u) au = hint->from;
    if (!rv.empty() && hint && hint->to == v) av = hint->from;
    add_edge_at(u, au, v, av);
    return;
  }
  Embedding emb(rot_);
  auto faces = emb.faces();
  // Connectivity of u and v in the current graph.
  std::vector<char> reach(rot_.order.size(), 0);
  std::vector<Vertex> stack{u};
  reach[static_cast<std::size_t>(u)] = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : rot_.order[static_cast<std::size_t>(x)])
      if (!reach[static_cast<std::size_t>(y)]) {
        reach[static_cast<std::size_t>(y)] = 1;
        stack.push_back(y);
      }
  }
  if (!reach[static_cast<std::size_t>(v)]) {
    Vertex au = ru.front(), av = rv.front();
    if (hint && hint->to == u) au = hint->from;
    if (hint && hint->to == v) av = hint->from;
    add_edge_at(u, au, v, av);
    return;
  }
  for (const auto& face : faces) {
    if (hint && std::find(face.begin(), face.end(), *hint) == face.end()) continue;
    std::optional<Dart> cu, cv;
    for (const Dart& d : face) {
      if (d.to == u && !cu) cu = d;
      if (d.to == v && !cv) cv = d;
    }
    if (cu && cv) {
      add_edge_at(u, cu->from, v, cv->from);
      return;
    }
  }
  throw std::logic_error("no face contains both endpoints");
}

Vertex EmbeddingBuilder::add_vertex_in_face(const std::vector<Vertex>& attach, std::optional<Dart> hint) {
  Vertex w = add_vertex();
  for (std::size_t i = 0; i < attach.size(); ++i) {
    // Every face incident to w lies inside the face the first edge entered.
    add_edge_in_face(w, attach[i], i == 0 ? hint : std::nullopt);
  }
  return w;
}

Graph EmbeddingBuilder::graph() const {
  Graph g(n());
  for (Vertex v = 0; v < n(); ++v)
    for (Vertex w : rot_.order[static_cast<std::size_t>(v)])
      if (v < w) g.add_edge(v, w);
  return g;
}

}  // namespace tjk
