#include "tjkernel/minor.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace tjk {

namespace {

using Mask = std::uint32_t;

// Branch sets of a minor model can always absorb the leftover vertices of
// their connected component, so it suffices to enumerate partitions of one
// component into exactly 3 + r connected blocks.
class PartitionSearch {
 public:
  PartitionSearch(std::vector<Mask> adj, std::vector<int> verts, int r)
      : adj_(std::move(adj)), verts_(std::move(verts)), r_(r), parts_(3 + r) {}

  bool run() {
    if (static_cast<int>(verts_.size()) < parts_) return false;
    blocks_.assign(static_cast<std::size_t>(parts_), 0);
    return assign(0, 0);
  }

 private:
  bool connected(Mask block) const {
    if (!block) return false;
    Mask seen = block & (~block + 1);
    Mask frontier = seen;
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= adj_[static_cast<std::size_t>(std::countr_zero(f))];
      next &= block & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen == block;
  }

  bool quotient_has_k3r() const {
    std::vector<Mask> nb(static_cast<std::size_t>(parts_), 0);
    for (int i = 0; i < parts_; ++i) {
      Mask reach = 0;
      for (Mask b = blocks_[static_cast<std::size_t>(i)]; b; b &= b - 1)
        reach |= adj_[static_cast<std::size_t>(std::countr_zero(b))];
      for (int j = 0; j < parts_; ++j)
        if (j != i && (reach & blocks_[static_cast<std::size_t>(j)])) nb[static_cast<std::size_t>(i)] |= Mask{1} << j;
    }
    Mask all = (Mask{1} << parts_) - 1;
    for (int a = 0; a < parts_; ++a)
      for (int b = a + 1; b < parts_; ++b)
        for (int c = b + 1; c < parts_; ++c) {
          Mask side = (Mask{1} << a) | (Mask{1} << b) | (Mask{1} << c);
          Mask common = nb[static_cast<std::size_t>(a)] & nb[static_cast<std::size_t>(b)] & nb[static_cast<std::size_t>(c)];
          if ((common & (all & ~side)) == (all & ~side)) return true;
        }
    return false;
  }

  bool assign(std::size_t idx, int used) {
    int remaining = static_cast<int>(verts_.size() - idx);
    if (used + remaining < parts_) return false;
    if (idx == verts_.size()) {
      for (Mask b : blocks_)
        if (!connected(b)) return false;
      return quotient_has_k3r();
    }
    Mask bit = Mask{1} << verts_[idx];
    for (int b = 0; b < used; ++b) {
      blocks_[static_cast<std::size_t>(b)] |= bit;
      bool hit = assign(idx + 1, used);
      blocks_[static_cast<std::size_t>(b)] &= ~bit;
      if (hit) return true;
    }
    if (used < parts_) {
      blocks_[static_cast<std::size_t>(used)] |= bit;
      bool hit = assign(idx + 1, used + 1);
      blocks_[static_cast<std::size_t>(used)] &= ~bit;
      if (hit) return true;
    }
    return false;
  }

  std::vector<Mask> adj_;
  std::vector<int> verts_;
  int r_;
  int parts_;
  std::vector<Mask> blocks_;
};

}  // namespace

bool check_k3r_minor_small(const Graph& g, int r, int n_limit) {
  if (r < 1) throw std::invalid_argument("r must be at least 1");
  if (g.n() > n_limit || g.n() > 31)
    throw std::invalid_argument("minor search refused: n=" + std::to_string(g.n()) + " exceeds limit " + std::to_string(n_limit));
  std::vector<Mask> adj(static_cast<std::size_t>(g.n()), 0);
  for (Vertex v = 0; v < g.n(); ++v)
    for (Vertex w : g.neighbors(v)) adj[static_cast<std::size_t>(v)] |= Mask{1} << w;

  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  for (Vertex s = 0; s < g.n(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<int> comp{s};
    seen[static_cast<std::size_t>(s)] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (Vertex w : g.neighbors(comp[i]))
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          comp.push_back(w);
        }
    if (PartitionSearch(adj, comp, r).run()) return true;
  }
  return false;
}

}  // namespace tjk
