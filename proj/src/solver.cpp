#include "tjkernel/solver.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>

namespace tjk {

const char* to_string(SolveVerdict v) {
  switch (v) {
    case SolveVerdict::Yes: return "yes";
    case SolveVerdict::No: return "no";
    case SolveVerdict::ResourceLimit: return "resource-limit";
  }
  return "?";
}

namespace {

std::uint64_t mix(std::uint64_t h) {
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  h *= 0xc4ceb9fe1a85ec53ULL;
  h ^= h >> 33;
  return h;
}

// Flat store of sorted k-tuples with an open-addressing index keyed by a
// 64-bit fingerprint; equal fingerprints fall back to tuple comparison.
class StateStore {
 public:
  explicit StateStore(int k) : k_(static_cast<std::size_t>(k)) { rehash(1024); }

  std::size_t size() const { return parent_.size(); }
  const Vertex* state(std::size_t idx) const { return tuples_.data() + idx * k_; }
  std::size_t parent(std::size_t idx) const { return parent_[idx]; }
  Jump jump(std::size_t idx) const { return jump_[idx]; }

  /// Inserts and returns {index, true}, or the existing {index, false}.
  std::pair<std::size_t, bool> insert(const Vertex* t, std::size_t parent, Jump j) {
    if ((size() + 1) * 2 > slots_.size()) rehash(slots_.size() * 2);
    std::uint64_t fp = fingerprint(t);
    std::size_t mask = slots_.size() - 1;
    for (std::size_t pos = fp & mask;; pos = (pos + 1) & mask) {
      std::uint32_t s = slots_[pos];
      if (s == kEmpty) {
        auto idx = size();
        slots_[pos] = static_cast<std::uint32_t>(idx);
        fps_.push_back(fp);
        tuples_.insert(tuples_.end(), t, t + k_);
        parent_.push_back(parent);
        jump_.push_back(j);
        return {idx, true};
      }
      if (fps_[s] == fp && std::equal(t, t + k_, state(s))) return {s, false};
    }
  }

 private:
  static constexpr std::uint32_t kEmpty = 0xffffffffu;

  std::uint64_t fingerprint(const Vertex* t) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::size_t i = 0; i < k_; ++i) h = mix(h ^ static_cast<std::uint64_t>(t[i]) ^ (i << 40));
    return h;
  }

  void rehash(std::size_t cap) {
    slots_.assign(cap, kEmpty);
    std::size_t mask = cap - 1;
    for (std::size_t idx = 0; idx < size(); ++idx) {
      std::size_t pos = fps_[idx] & mask;
      while (slots_[pos] != kEmpty) pos = (pos + 1) & mask;
      slots_[pos] = static_cast<std::uint32_t>(idx);
    }
  }

  std::size_t k_;
  std::vector<std::uint32_t> slots_;
  std::vector<std::uint64_t> fps_;
  std::vector<Vertex> tuples_;
  std::vector<std::size_t> parent_;
  std::vector<Jump> jump_;
};

}  // namespace

SolveOutcome solve_bfs(const Instance& inst, const SolveLimits& limits) {
  SolveOutcome out;
  const Graph& g = inst.graph;
  const int n = g.n();
  const auto k = static_cast<std::size_t>(inst.k);
  if (inst.source == inst.target) {
    out.verdict = SolveVerdict::Yes;
    out.states_explored = 1;
    return out;
  }
  auto start = std::chrono::steady_clock::now();
  StateStore store(inst.k);
  store.insert(inst.source.data(), 0, {});

  std::vector<int> cover(static_cast<std::size_t>(n));
  std::vector<char> token(static_cast<std::size_t>(n));
  std::vector<Vertex> next(k);
  for (std::size_t head = 0; head < store.size(); ++head) {
    if ((head & 1023) == 0 && limits.max_millis >= 0) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
      if (ms > limits.max_millis) {
        out.verdict = SolveVerdict::ResourceLimit;
        out.states_explored = store.size();
        return out;
      }
    }
    const Vertex* cur = store.state(head);
    std::fill(cover.begin(), cover.end(), 0);
    std::fill(token.begin(), token.end(), 0);
    for (std::size_t i = 0; i < k; ++i) {
      token[static_cast<std::size_t>(cur[i])] = 1;
      for (Vertex w : g.neighbors(cur[i])) ++cover[static_cast<std::size_t>(w)];
    }
    for (std::size_t i = 0; i < k; ++i) {
      Vertex v = cur[i];
      for (Vertex w = 0; w < n; ++w) {
        if (token[static_cast<std::size_t>(w)]) continue;
        int blockers = cover[static_cast<std::size_t>(w)] - (g.adjacent(v, w) ? 1 : 0);
        if (blockers != 0) continue;
        // Replace v by w keeping the tuple sorted.
        std::size_t o = 0;
        bool placed = false;
        for (std::size_t j = 0; j < k; ++j) {
          if (j == i) continue;
          if (!placed && w < cur[j]) {
            next[o++] = w;
            placed = true;
          }
          next[o++] = cur[j];
        }
        if (!placed) next[o++] = w;
        auto [idx, fresh] = store.insert(next.data(), head, {v, w});
        cur = store.state(head);  // storage may have moved
        if (!fresh) continue;
        if (std::equal(next.begin(), next.end(), inst.target.begin())) {
          out.verdict = SolveVerdict::Yes;
          out.states_explored = store.size();
          for (std::size_t s = idx; s != 0; s = store.parent(s)) out.sequence.jumps.push_back(store.jump(s));
          std::reverse(out.sequence.jumps.begin(), out.sequence.jumps.end());
          return out;
        }
        if (store.size() >= limits.max_states) {
          out.verdict = SolveVerdict::ResourceLimit;
          out.states_explored = store.size();
          return out;
        }
      }
    }
  }
  out.verdict = SolveVerdict::No;
  out.states_explored = store.size();
  return out;
}

VerifyReport verify_sequence(const Instance& inst, const ReconfSequence& seq) {
  const Graph& g = inst.graph;
  VertexSet tokens = inst.source_set();
  VerifyReport rep;
  for (std::size_t i = 0; i < seq.jumps.size(); ++i) {
    auto [from, to] = seq.jumps[i];
    rep.failing_step = i + 1;
    if (!g.valid(from) || !g.valid(to)) {
      rep.message = "vertex out of range";
      return rep;
    }
    if (!tokens.contains(from)) {
      rep.message = "no token on " + std::to_string(from + 1);
      return rep;
    }
    if (tokens.contains(to)) {
      rep.message = "vertex " + std::to_string(to + 1) + " already carries a token";
      return rep;
    }
    tokens.erase(from);
    if (g.neighbor_set(to).intersects(tokens)) {
      rep.message = "token set not independent after jump";
      return rep;
    }
    tokens.insert(to);
  }
  if (tokens != inst.target_set()) {
    rep.failing_step = seq.jumps.size() + 1;
    rep.message = "final token set differs from target";
    return rep;
  }
  rep.ok = true;
  rep.failing_step = 0;
  return rep;
}

bool greedy_oracle(const Graph& g, const std::vector<Vertex>& A, const std::vector<Vertex>& B) {
  if (A.size() != B.size() || A.size() > 6) throw std::invalid_argument("greedy_oracle needs |A| == |B| <= 6");
  const std::size_t k = A.size();
  std::vector<std::size_t> pa(k), pb(k);
  std::iota(pa.begin(), pa.end(), 0);
  do {
    std::iota(pb.begin(), pb.end(), 0);
    do {
      bool good = true;
      for (std::size_t t = 0; t <= k && good; ++t) {
        std::vector<Vertex> mixed;
        for (std::size_t i = 0; i < t; ++i) mixed.push_back(B[pb[i]]);
        for (std::size_t i = t; i < k; ++i) mixed.push_back(A[pa[i]]);
        std::sort(mixed.begin(), mixed.end());
        if (std::adjacent_find(mixed.begin(), mixed.end()) != mixed.end() || !is_independent(g, mixed)) good = false;
      }
      if (good) return true;
    } while (std::next_permutation(pb.begin(), pb.end()));
  } while (std::next_permutation(pa.begin(), pa.end()));
  return false;
}

}  // namespace tjk
