#include "tjkernel/anticomplete.hpp"

#include <algorithm>
#include <functional>

#include "tjkernel/embedding.hpp"

namespace tjk {

const char* to_string(TrimStatus s) {
  switch (s) {
    case TrimStatus::Ok: return "ok";
    case TrimStatus::FallbackUsed: return "fallback";
    case TrimStatus::EmbeddingInconsistent: return "embedding-inconsistent";
  }
  return "?";
}

bool anticomplete(const Graph& g, const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  VertexSet sb = g.make_set(b);
  for (Vertex v : a)
    if (sb.contains(v) || g.neighbor_set(v).intersects(sb)) return false;
  return true;
}

namespace {

// Corner at `at`, directly after neighbour `after` in the rotation of `at`.
struct Corner {
  Vertex at;
  Vertex after;
};

// Members of `cls` on the face of its K_{2,m} sub-embedding that contains `ref`.
std::vector<Vertex> boundary_members(const Graph& g, const Embedding& emb, const TwoClassRef& cls, Corner ref) {
  VertexSet members = g.make_set(cls.members);
  VertexSet hv = members;
  hv.insert(cls.x);
  hv.insert(cls.y);
  auto h_adjacent = [&](Vertex u, Vertex v) {
    if (u == cls.x || u == cls.y) return members.contains(v);
    if (v == cls.x || v == cls.y) return members.contains(u);
    return false;
  };

  // Move the reference onto a vertex of H if it is not on one already.
  if (!hv.contains(ref.at)) {
    std::vector<Vertex> queue{ref.at};
    VertexSet seen = g.empty_set();
    seen.insert(ref.at);
    bool found = false;
    for (std::size_t i = 0; i < queue.size() && !found; ++i) {
      Vertex w = queue[i];
      for (Vertex h : emb.rotation(w)) {
        if (hv.contains(h)) {
          ref = {h, w};
          found = true;
          break;
        }
        if (!seen.contains(h)) {
          seen.insert(h);
          queue.push_back(h);
        }
      }
    }
    if (!found) return {};
  }
  Vertex h = ref.at;
  Vertex p = ref.after;
  const std::size_t deg = emb.rotation(h).size();
  for (std::size_t step = 0; step < deg && !h_adjacent(h, p); ++step) p = emb.pred(h, p);
  if (!h_adjacent(h, p)) return {};

  // Trace the H-face of dart p -> h using the rotation restricted to H.
  auto h_succ = [&](Vertex v, Vertex u) {
    Vertex w = emb.succ(v, u);
    while (!h_adjacent(v, w)) w = emb.succ(v, w);
    return w;
  };
  std::vector<Vertex> out;
  Vertex from = p, to = h;
  const std::size_t cap = 4 * (cls.members.size() + 2);
  for (std::size_t i = 0; i < cap; ++i) {
    if (members.contains(to)) out.push_back(to);
    Vertex nxt = h_succ(to, from);
    from = to;
    to = nxt;
    if (from == p && to == h) break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Vertex> minus(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool pairwise_anticomplete(const Graph& g, const std::vector<std::vector<Vertex>>& sets) {
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (!anticomplete(g, sets[i], sets[j])) return false;
  return true;
}

std::vector<int> component_ids(const Graph& g) {
  std::vector<int> comp(static_cast<std::size_t>(g.n()), -1);
  int next = 0;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    std::vector<Vertex> stack{s};
    comp[static_cast<std::size_t>(s)] = next;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v))
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  return comp;
}

// Exhaustive choice of at most two deletions per trimmable class among the
// members that touch another set. `fixed` sets are never trimmed.
bool exhaustive_trim(const Graph& g, const std::vector<std::vector<Vertex>>& sets, const std::vector<bool>& trimmable,
                     std::vector<std::vector<Vertex>>& removed) {
  const std::size_t n = sets.size();
  std::vector<std::vector<std::vector<Vertex>>> options(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Vertex> touching;
    for (Vertex v : sets[i]) {
      bool hit = false;
      for (std::size_t j = 0; j < n && !hit; ++j)
        if (j != i && !anticomplete(g, {v}, sets[j])) hit = true;
      if (hit) touching.push_back(v);
    }
    options[i].push_back({});
    if (!trimmable[i]) continue;
    for (std::size_t a = 0; a < touching.size(); ++a) options[i].push_back({touching[a]});
    for (std::size_t a = 0; a < touching.size(); ++a)
      for (std::size_t b = a + 1; b < touching.size(); ++b) options[i].push_back({touching[a], touching[b]});
  }
  std::vector<std::vector<Vertex>> chosen(n);
  std::uint64_t budget = 2'000'000;
  std::function<bool(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) return true;
    for (const auto& opt : options[i]) {
      if (budget-- == 0) return false;
      chosen[i] = minus(sets[i], opt);
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = anticomplete(g, chosen[i], chosen[j]);
      if (ok && rec(i + 1)) {
        removed[i] = opt;
        return true;
      }
      if (budget == 0) return false;
    }
    return false;
  };
  return rec(0);
}

// Shared driver: `sets` holds the class member lists followed by optional
// fixed sets; `refs` lists candidate reference corners for one component.
TrimResult trim_with_refs(const Graph& g, const Embedding& emb, const std::vector<TwoClassRef>& classes,
                          const std::vector<std::vector<Vertex>>& fixed_sets, const std::vector<bool>& trimmable,
                          const std::vector<Corner>& refs) {
  TrimResult res;
  const std::size_t nc = classes.size();
  {
    std::vector<std::vector<Vertex>> sets;
    for (const auto& c : classes) sets.push_back(c.members);
    for (const auto& f : fixed_sets) sets.push_back(f);
    if (pairwise_anticomplete(g, sets)) {
      sets.resize(nc);
      res.trimmed = std::move(sets);
      res.removed.assign(nc, {});
      return res;
    }
  }
  for (const Corner& ref : refs) {
    std::vector<std::vector<Vertex>> removed(nc), sets;
    bool sane = true;
    for (std::size_t i = 0; i < nc && sane; ++i) {
      if (!trimmable[i]) continue;
      removed[i] = boundary_members(g, emb, classes[i], ref);
      if (removed[i].size() > 2) sane = false;
    }
    if (!sane) continue;
    for (std::size_t i = 0; i < nc; ++i) sets.push_back(minus(classes[i].members, removed[i]));
    for (const auto& f : fixed_sets) sets.push_back(f);
    if (!pairwise_anticomplete(g, sets)) continue;
    res.status = TrimStatus::Ok;
    res.removed = std::move(removed);
    sets.resize(nc);
    res.trimmed = std::move(sets);
    return res;
  }
  // Exhaustive fallback.
  std::vector<std::vector<Vertex>> all;
  std::vector<bool> trim_all;
  for (std::size_t i = 0; i < nc; ++i) {
    all.push_back(classes[i].members);
    trim_all.push_back(trimmable[i]);
  }
  for (const auto& f : fixed_sets) {
    all.push_back(f);
    trim_all.push_back(false);
  }
  std::vector<std::vector<Vertex>> removed(all.size());
  if (nc <= 6 && exhaustive_trim(g, all, trim_all, removed)) {
    res.status = TrimStatus::FallbackUsed;
    removed.resize(nc);
    for (std::size_t i = 0; i < nc; ++i) {
      std::sort(removed[i].begin(), removed[i].end());
      res.trimmed.push_back(minus(classes[i].members, removed[i]));
    }
    res.removed = std::move(removed);
    return res;
  }
  res.status = TrimStatus::EmbeddingInconsistent;
  for (const auto& c : classes) res.trimmed.push_back(c.members);
  res.removed.assign(nc, {});
  return res;
}

std::vector<TwoClassRef> normalized(std::vector<TwoClassRef> classes) {
  for (auto& c : classes) std::sort(c.members.begin(), c.members.end());
  return classes;
}

std::vector<Corner> corners_of(const Embedding& emb, const std::vector<Vertex>& vs) {
  std::vector<Corner> out;
  for (Vertex v : vs)
    for (Vertex u : emb.rotation(v)) out.push_back({v, u});
  return out;
}

}  // namespace

TrimResult anticompleteify(const Graph& g, const std::vector<TwoClassRef>& input, const RotationSystem& rot,
                           bool protect_last) {
  const auto classes = normalized(input);
  Embedding emb(rot);
  auto comp = component_ids(g);
  TrimResult out;
  out.trimmed.resize(classes.size());
  out.removed.resize(classes.size());
  if (classes.empty()) return out;

  // Classes in different components never touch; handle components separately.
  std::vector<int> comps;
  for (const auto& c : classes) comps.push_back(comp[static_cast<std::size_t>(c.x)]);
  std::vector<int> distinct = comps;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (int cid : distinct) {
    std::vector<std::size_t> idx;
    std::vector<TwoClassRef> group;
    std::vector<bool> trimmable;
    for (std::size_t i = 0; i < classes.size(); ++i)
      if (comps[i] == cid) {
        idx.push_back(i);
        group.push_back(classes[i]);
        trimmable.push_back(!(protect_last && i + 1 == classes.size()));
      }
    std::vector<Corner> refs;
    if (!trimmable.back()) {
      // Reference points in the wedges of the protected class.
      const auto& last = group.back();
      for (Vertex u : emb.rotation(last.x))
        if (std::binary_search(last.members.begin(), last.members.end(), u)) refs.push_back({last.x, u});
    } else {
      std::vector<Vertex> verts;
      for (Vertex v = 0; v < g.n(); ++v)
        if (comp[static_cast<std::size_t>(v)] == cid) verts.push_back(v);
      refs = corners_of(emb, verts);
    }
    auto part = trim_with_refs(g, emb, group, {}, trimmable, refs);
    if (part.status == TrimStatus::EmbeddingInconsistent ||
        (part.status == TrimStatus::FallbackUsed && out.status == TrimStatus::Ok))
      out.status = part.status;
    for (std::size_t j = 0; j < idx.size(); ++j) {
      out.trimmed[idx[j]] = std::move(part.trimmed[j]);
      out.removed[idx[j]] = std::move(part.removed[j]);
    }
  }
  return out;
}

TrimResult anticompleteify_around(const Graph& g, const TwoClassRef& a, const TwoClassRef& b,
                                  const std::vector<Vertex>& outside, const RotationSystem& rot) {
  Embedding emb(rot);
  std::vector<Vertex> sorted = outside;
  std::sort(sorted.begin(), sorted.end());
  auto refs = corners_of(emb, sorted);
  if (refs.empty()) {
    // An isolated outside set touches nothing; fall back to any corner.
    std::vector<Vertex> all;
    for (Vertex v = 0; v < g.n(); ++v) all.push_back(v);
    refs = corners_of(emb, all);
  }
  return trim_with_refs(g, emb, normalized({a, b}), {sorted}, {true, true}, refs);
}

OutsideTrim trim_outside_set(const Graph& g, const TwoClassRef& a, const TwoClassRef& b,
                             const std::vector<Vertex>& outside) {
  if (!anticomplete(g, a.members, b.members)) throw std::invalid_argument("classes must already be anticomplete");
  VertexSet touch = g.make_set(a.members) | g.make_set(b.members);
  OutsideTrim out;
  for (Vertex v : outside) {
    if (g.neighbor_set(v).intersects(touch))
      out.removed.push_back(v);
    else
      out.kept.push_back(v);
  }
  out.within_bound = out.removed.size() <= 4;
  return out;
}

}  // namespace tjk
