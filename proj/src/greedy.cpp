#include "tjkernel/greedy.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace tjk {

const char* to_string(Side s) { return s == Side::Source ? "source" : "target"; }

const std::vector<Vertex>& side_tokens(const Instance& inst, Side s) {
  return s == Side::Source ? inst.source : inst.target;
}

const char* to_string(CleanVerdict v) {
  switch (v) {
    case CleanVerdict::Greedy: return "greedy";
    case CleanVerdict::ThreeClean: return "3-clean";
    case CleanVerdict::TwoTwoClean: return "2,2-clean";
    case CleanVerdict::NotClean: return "not-clean";
    case CleanVerdict::Undecided: return "undecided";
  }
  return "?";
}

namespace {

class GreedySearch {
 public:
  GreedySearch(const Graph& g, const std::vector<Vertex>& A, const std::vector<Vertex>& B, const GreedyLimits& lim)
      : g_(g), A_(A), B_(B), lim_(lim) {}

  SearchStatus run(VertexSet current) {
    current_ = std::move(current);
    bool hit = dfs(0, 0);
    if (hit) return SearchStatus::Found;
    return aborted_ ? SearchStatus::Undecided : SearchStatus::NotFound;
  }

  std::vector<Vertex> i_order, j_order;

 private:
  bool dfs(std::uint32_t ma, std::uint32_t mb) {
    if (std::popcount(ma) == static_cast<int>(A_.size())) return true;
    std::uint64_t key = ma | (static_cast<std::uint64_t>(mb) << 32);
    if (failed_.count(key)) return false;
    if (failed_.size() >= lim_.max_states) {
      aborted_ = true;
      return false;
    }
    for (std::size_t a = 0; a < A_.size(); ++a) {
      if (ma >> a & 1) continue;
      Vertex va = A_[a];
      current_.erase(va);
      for (std::size_t b = 0; b < B_.size(); ++b) {
        if (mb >> b & 1) continue;
        Vertex vb = B_[b];
        if (current_.contains(vb) || g_.neighbor_set(vb).intersects(current_)) continue;
        current_.insert(vb);
        i_order.push_back(va);
        j_order.push_back(vb);
        if (dfs(ma | 1u << a, mb | 1u << b)) return true;
        i_order.pop_back();
        j_order.pop_back();
        current_.erase(vb);
        if (aborted_) break;
      }
      current_.insert(va);
      if (aborted_) return false;
    }
    failed_.insert(key);
    return false;
  }

  const Graph& g_;
  const std::vector<Vertex>& A_;
  const std::vector<Vertex>& B_;
  GreedyLimits lim_;
  VertexSet current_;
  std::unordered_set<std::uint64_t> failed_;
  bool aborted_ = false;
};

}  // namespace

GreedyOrder check_greedy_from(const Graph& g, const std::vector<Vertex>& base, const std::vector<Vertex>& A,
                              const std::vector<Vertex>& B, const GreedyLimits& limits) {
  GreedyOrder out;
  if (A.size() > limits.max_tokens || B.size() > 32) {
    out.status = SearchStatus::Undecided;
    return out;
  }
  if (B.size() < A.size()) return out;
  VertexSet start = g.make_set(base);
  for (Vertex a : A) {
    if (start.contains(a)) return out;
    start.insert(a);
  }
  if (!is_independent(g, start)) return out;
  GreedySearch search(g, A, B, limits);
  out.status = search.run(start);
  if (out.status == SearchStatus::Found) {
    out.i_order = std::move(search.i_order);
    out.j_order = std::move(search.j_order);
  }
  return out;
}

GreedyOrder check_greedy(const Graph& g, const std::vector<Vertex>& A, const std::vector<Vertex>& B,
                         const GreedyLimits& limits) {
  return check_greedy_from(g, {}, A, B, limits);
}

CleanClassification classify_clean(const Instance& inst, const ProjectionDecomposition& dec,
                                   const std::vector<Vertex>& I, Side side, const GreedyLimits& limits) {
  const Graph& g = inst.graph;
  const auto& tokens = side_tokens(inst, side);
  CleanClassification out;

  std::vector<Vertex> pool = I;
  std::sort(pool.begin(), pool.end());
  auto direct = check_greedy(g, tokens, pool, limits);
  if (direct.status == SearchStatus::Found) {
    out.verdict = CleanVerdict::Greedy;
    out.i_order = std::move(direct.i_order);
    out.j_order = std::move(direct.j_order);
    return out;
  }
  bool undecided = direct.status == SearchStatus::Undecided;
  if (tokens.size() < 2) {
    out.verdict = undecided ? CleanVerdict::Undecided : CleanVerdict::NotClean;
    return out;
  }

  // Host data: the 2-class of each pool vertex and its share of the pool.
  VertexSet in_pool = g.make_set(pool);
  auto classes = dec.two_classes();
  std::vector<int> class_of(static_cast<std::size_t>(g.n()), -1);
  std::vector<std::vector<Vertex>> hits(classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (Vertex v : classes[c].members) {
      class_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
      if (in_pool.contains(v)) hits[c].push_back(v);
    }
  auto partner_class = [&](std::size_t c) -> int {
    for (std::size_t d = 0; d < classes.size(); ++d) {
      if (d == c || hits[d].size() < 2) continue;
      if (classes[d].has_key(classes[c].x) || classes[d].has_key(classes[c].y)) return static_cast<int>(d);
    }
    return -1;
  };

  for (std::size_t a = 0; a < pool.size(); ++a)
    for (std::size_t b = a + 1; b < pool.size(); ++b) {
      Vertex j1 = pool[a], j2 = pool[b];
      int c = class_of[static_cast<std::size_t>(j1)];
      if (c < 0 || c != class_of[static_cast<std::size_t>(j2)]) continue;
      const auto cu = static_cast<std::size_t>(c);
      CleanVerdict kind;
      int partner = -1;
      if (hits[cu].size() >= 3) {
        kind = CleanVerdict::ThreeClean;
      } else {
        partner = partner_class(cu);
        if (partner < 0) continue;
        kind = CleanVerdict::TwoTwoClean;
      }
      std::vector<Vertex> rest_pool;
      for (Vertex v : pool)
        if (v != j1 && v != j2) rest_pool.push_back(v);
      for (std::size_t p = 0; p < tokens.size(); ++p)
        for (std::size_t q = p + 1; q < tokens.size(); ++q) {
          std::vector<Vertex> rest_tokens;
          for (std::size_t t = 0; t < tokens.size(); ++t)
            if (t != p && t != q) rest_tokens.push_back(tokens[t]);
          auto cont = check_greedy_from(g, {j1, j2}, rest_tokens, rest_pool, limits);
          if (cont.status == SearchStatus::Undecided) undecided = true;
          if (cont.status != SearchStatus::Found) continue;
          out.verdict = kind;
          out.token_pair = {tokens[p], tokens[q]};
          out.pool_pair = {j1, j2};
          out.i_order = {tokens[p], tokens[q]};
          out.j_order = {j1, j2};
          out.i_order.insert(out.i_order.end(), cont.i_order.begin(), cont.i_order.end());
          out.j_order.insert(out.j_order.end(), cont.j_order.begin(), cont.j_order.end());
          out.host = classes[cu];
          if (kind == CleanVerdict::ThreeClean) {
            for (Vertex v : hits[cu])
              if (v != j1 && v != j2) out.auxiliary.push_back(v);
          } else {
            out.second_host = classes[static_cast<std::size_t>(partner)];
            out.auxiliary = hits[static_cast<std::size_t>(partner)];
          }
          return out;
        }
    }
  out.verdict = undecided ? CleanVerdict::Undecided : CleanVerdict::NotClean;
  return out;
}

}  // namespace tjk
