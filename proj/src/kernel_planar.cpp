#include "tjkernel/kernel_planar.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "tjkernel/embedding.hpp"
#include "tjkernel/kernel_general.hpp"

namespace tjk {

const char* to_string(ClassColor c) {
  switch (c) {
    case ClassColor::Blue: return "blue";
    case ClassColor::Red: return "red";
    case ClassColor::Uncolored: return "uncolored";
  }
  return "?";
}

ClassColor ClassColoring::of(Vertex x, Vertex y) const {
  auto it = color.find({std::min(x, y), std::max(x, y)});
  return it == color.end() ? ClassColor::Uncolored : it->second;
}

int free_vertex_count(const Graph& g, const std::vector<Vertex>& tokens) {
  VertexSet t = g.make_set(tokens);
  VertexSet closed = g.neighborhood(t) | t;
  return g.n() - static_cast<int>(closed.size());
}

namespace {

int keys_in(const TwoClassRef& c, const VertexSet& tokens) {
  return (tokens.contains(c.x) ? 1 : 0) + (tokens.contains(c.y) ? 1 : 0);
}

// I_0: union of maximum independent subsets of the trimmed classes, aligned per class.
std::vector<std::vector<Vertex>> independent_pool(const Graph& g, const std::vector<TwoClassRef>& classes,
                                                  const TrimResult& trim) {
  std::vector<std::vector<Vertex>> per(classes.size());
  VertexSet chosen = g.empty_set();
  for (std::size_t i = 0; i < classes.size(); ++i) {
    std::vector<Vertex> base;
    try {
      base = max_independent_paths_cycles(g, trim.trimmed[i]);
    } catch (const EmbeddingClassViolation&) {
      for (Vertex v : trim.trimmed[i])
        if (!g.neighbor_set(v).intersects(g.make_set(base))) base.push_back(v);
    }
    // Guard against leftover contacts between classes (only possible when
    // the trimming was inconsistent): keep the earlier class's vertex.
    for (Vertex v : base)
      if (!g.neighbor_set(v).intersects(chosen)) {
        per[i].push_back(v);
        chosen.insert(v);
      }
  }
  return per;
}

using Candidate = std::vector<Vertex>;

std::vector<Candidate> side_candidates(const std::vector<TwoClassRef>& classes,
                                       const std::vector<std::vector<Vertex>>& pool, const VertexSet& tokens, int k) {
  const std::size_t nc = classes.size();
  std::vector<bool> good(nc), bad_big(nc), bad_small(nc);
  std::vector<Vertex> good_vertices;
  for (std::size_t i = 0; i < nc; ++i) {
    good[i] = keys_in(classes[i], tokens) <= 1;
    if (good[i]) good_vertices.insert(good_vertices.end(), pool[i].begin(), pool[i].end());
    bad_big[i] = !good[i] && pool[i].size() >= 2;
    bad_small[i] = !good[i] && pool[i].size() == 1;
  }
  std::vector<Candidate> out;
  const auto ku = static_cast<std::size_t>(k);
  if (good_vertices.size() >= ku) out.push_back(Candidate(good_vertices.begin(), good_vertices.begin() + k));

  // Extends `start` class by class in the proof's order until it reaches k.
  auto extend = [&](Candidate start, const std::vector<bool>& used) {
    auto add_from = [&](const std::vector<bool>& which) {
      for (std::size_t i = 0; i < nc && start.size() < ku; ++i)
        if (which[i] && !used[i])
          for (Vertex v : pool[i]) {
            if (start.size() >= ku) break;
            start.push_back(v);
          }
    };
    add_from(bad_big);
    add_from(bad_small);
    add_from(good);
    std::sort(start.begin(), start.end());
    return start;
  };

  for (std::size_t a = 0; a < nc; ++a)
    for (std::size_t b = a + 1; b < nc; ++b) {
      if (!bad_big[a] || !bad_big[b]) continue;
      bool share = (classes[b].has_key(classes[a].x) && tokens.contains(classes[a].x)) ||
                   (classes[b].has_key(classes[a].y) && tokens.contains(classes[a].y));
      if (!share) continue;
      std::vector<bool> used(nc, false);
      used[a] = used[b] = true;
      Candidate start{pool[a][0], pool[a][1], pool[b][0], pool[b][1]};
      out.push_back(extend(start, used));
    }
  for (std::size_t a = 0; a < nc; ++a) {
    if (good[a] || pool[a].size() < 3) continue;
    std::vector<bool> used(nc, false);
    used[a] = true;
    Candidate start(pool[a].begin(), pool[a].begin() + static_cast<long>(std::max<std::size_t>(3, std::min(ku, pool[a].size()))));
    out.push_back(extend(start, used));
  }
  // Last resort: the lowest k vertices of I_0.
  Candidate all;
  for (const auto& p : pool) all.insert(all.end(), p.begin(), p.end());
  std::sort(all.begin(), all.end());
  if (all.size() >= ku) out.push_back(Candidate(all.begin(), all.begin() + k));

  std::vector<Candidate> uniq;
  std::set<Candidate> seen;
  for (auto& c : out)
    if (c.size() >= ku && seen.insert(c).second) uniq.push_back(std::move(c));
  return uniq;
}

}  // namespace

std::optional<CleanSet> find_clean_set(const Instance& inst, const ProjectionDecomposition& dec,
                                       const RotationSystem& rot, const GreedyLimits& limits) {
  const Graph& g = inst.graph;
  auto classes = dec.two_classes();
  auto trim = anticompleteify(g, classes, rot, false);
  auto pool = independent_pool(g, classes, trim);
  int pool_size = 0;
  for (const auto& p : pool) pool_size += static_cast<int>(p.size());
  if (pool_size < inst.k) return std::nullopt;

  auto src = side_candidates(classes, pool, inst.source_set(), inst.k);
  auto tgt = side_candidates(classes, pool, inst.target_set(), inst.k);
  constexpr std::size_t kMaxPerSide = 16;
  if (src.size() > kMaxPerSide) src.resize(kMaxPerSide);
  if (tgt.size() > kMaxPerSide) tgt.resize(kMaxPerSide);

  int tried = 0;
  std::set<std::vector<Vertex>> seen;
  for (const auto& s : src)
    for (const auto& t : tgt) {
      std::vector<Vertex> I;
      std::set_union(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(I));
      if (static_cast<int>(I.size()) > 2 * inst.k || !seen.insert(I).second) continue;
      if (!is_independent(g, I)) continue;
      ++tried;
      auto cs = classify_clean(inst, dec, I, Side::Source, limits);
      if (!cs.clean()) continue;
      auto ct = classify_clean(inst, dec, I, Side::Target, limits);
      if (!ct.clean()) continue;
      CleanSet out;
      out.I = std::move(I);
      out.source = std::move(cs);
      out.target = std::move(ct);
      out.trim_status = trim.status;
      out.pool_size = pool_size;
      out.candidates_tried = tried;
      return out;
    }
  return std::nullopt;
}

bool sufficient_greedy_by_volume(const ProjectionDecomposition& dec, const std::vector<Vertex>& tokens, int k) {
  VertexSet t = dec.X;
  t.clear();
  for (Vertex v : tokens) t.insert(v);
  long long q = 0, volume = 0;
  for (const auto& c : dec.two_classes())
    if (keys_in(c, t) < 2) {
      ++q;
      volume += static_cast<long long>(c.members.size());
    }
  return q >= 1 && volume >= 2 * q + 2LL * k;
}

std::vector<TwoClassRef> locked_classes(const ProjectionDecomposition& dec, const std::vector<Vertex>& tokens) {
  std::vector<TwoClassRef> out;
  for (auto& c : dec.two_classes())
    if (std::binary_search(tokens.begin(), tokens.end(), c.x) && std::binary_search(tokens.begin(), tokens.end(), c.y))
      out.push_back(std::move(c));
  return out;
}

std::vector<Vertex> important_vertices(const ProjectionDecomposition& dec, const std::vector<Vertex>& tokens) {
  auto locked = locked_classes(dec, tokens);
  std::vector<Vertex> out;
  for (Vertex v : tokens) {
    int seven = 0, five = 0;
    for (const auto& c : locked) {
      if (!c.has_key(v)) continue;
      if (c.members.size() >= 7) ++seven;
      if (c.members.size() >= 5) ++five;
    }
    if (seven >= 1 || five >= 2) out.push_back(v);
  }
  return out;
}

namespace {

bool covered(const std::vector<TwoClassRef>& locked, const std::map<std::vector<Vertex>, ClassColor>& color, Vertex v) {
  int blue = 0, red = 0;
  for (const auto& c : locked) {
    if (!c.has_key(v)) continue;
    auto col = color.at({c.x, c.y});
    if (col == ClassColor::Blue) ++blue;
    if (col == ClassColor::Red) ++red;
  }
  return blue >= 1 || red >= 2;
}

}  // namespace

ClassColoring color_removal(const ProjectionDecomposition& dec, const std::vector<Vertex>& tokens,
                            const std::vector<Vertex>& important) {
  auto locked = locked_classes(dec, tokens);
  ClassColoring out;
  out.important = important;
  for (const auto& c : locked) {
    auto s = c.members.size();
    out.color[{c.x, c.y}] = s >= 7 ? ClassColor::Blue : s >= 5 ? ClassColor::Red : ClassColor::Uncolored;
  }
  auto all_covered = [&] {
    return std::all_of(important.begin(), important.end(), [&](Vertex v) { return covered(locked, out.color, v); });
  };
  if (!all_covered()) throw std::logic_error("important vertex not covered by the initial colouring");
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& c : locked) {
      auto& col = out.color[{c.x, c.y}];
      if (col == ClassColor::Uncolored) continue;
      ClassColor saved = col;
      col = ClassColor::Uncolored;
      if (all_covered()) {
        changed = true;
      } else {
        col = saved;
      }
    }
  }
  // Fixpoint shape: each Red class has a key with exactly two Red and no Blue classes.
  for (const auto& c : locked) {
    if (out.color[{c.x, c.y}] != ClassColor::Red) continue;
    bool witness = false;
    for (Vertex key : {c.x, c.y}) {
      int blue = 0, red = 0;
      for (const auto& d : locked) {
        if (!d.has_key(key)) continue;
        auto col = out.color[{d.x, d.y}];
        if (col == ClassColor::Blue) ++blue;
        if (col == ClassColor::Red) ++red;
      }
      if (blue == 0 && red == 2) witness = true;
    }
    if (!witness) throw std::logic_error("red class without a two-red key at the fixpoint");
  }
  return out;
}

RuleOutcome apply_reduction_rules(const Instance& inst, const ProjectionDecomposition& dec,
                                  const std::vector<Vertex>& I, const ClassColoring& coloring) {
  const Graph& g = inst.graph;
  VertexSet in_I = g.make_set(I);
  VertexSet important = g.make_set(coloring.important);
  VertexSet doomed = g.empty_set();
  RuleOutcome out;
  for (const auto& c : dec.two_classes()) {
    if (c.members.size() <= 4) continue;
    ClassColor col = coloring.of(c.x, c.y);
    int keep_extra;
    int* counter;
    if (col == ClassColor::Blue) {
      keep_extra = 7;
      counter = &out.rule2_deleted;
    } else if (col == ClassColor::Red) {
      keep_extra = 5;
      counter = &out.rule3_deleted;
    } else if (important.contains(c.x) && important.contains(c.y)) {
      keep_extra = 0;
      counter = &out.rule1_deleted;
    } else {
      continue;
    }
    int kept = 0;
    for (Vertex v : c.members) {
      if (in_I.contains(v)) continue;
      if (kept < keep_extra) {
        ++kept;
        continue;
      }
      doomed.insert(v);
      ++*counter;
    }
  }
  out.instance = doomed.empty() ? inst : delete_vertices(inst, doomed);
  return out;
}

KernelResult build_kernel_planar(const Instance& inst, const PlanarOptions& opts) {
  if (!inst.embedding) throw std::invalid_argument("planar pipeline needs a rotation system");
  auto check = validate_rotation_system(inst.graph, *inst.embedding);
  if (!check.accepted) throw std::invalid_argument("rotation system rejected: " + check.message);

  ColoringResult own;
  if (!opts.coloring) own = degeneracy_coloring(inst.graph);
  const ColoringResult& col = opts.coloring ? *opts.coloring : own;
  const long long c = col.color_count;
  const int k = inst.k;
  auto dec = compute_projection(inst);

  KernelResult res;
  res.instance = inst;
  auto& rep = res.report;
  rep["mode"] = "planar";
  rep["k"] = k;
  rep["n"] = inst.n();
  rep["c"] = c;
  rep["n2"] = dec.n2;
  rep["n3"] = dec.n3;
  rep["c1"] = dec.c1_vertices.size();
  rep["c2"] = dec.c2_vertices.size();
  rep["c3"] = dec.c3_vertices.size();
  rep["c1_threshold"] = c * k;
  rep["c2_threshold"] = 28 * k;
  const long long bound = (38 + c) * k;
  rep["size_bound"] = bound;

  auto finish = [&](const char* step) {
    rep["step"] = step;
    rep["verdict"] = to_string(res.verdict);
    rep["final_n"] = res.instance.n();
    bool ok = res.verdict == KernelVerdict::TrivialYes || res.instance.n() <= bound;
    rep["size_bound_ok"] = ok;
    rep["non_tight"] = res.non_tight;
    if (opts.strict && !ok && !res.non_tight)
      throw StrictBoundViolation("kernel has " + std::to_string(res.instance.n()) + " vertices, bound " +
                                 std::to_string(bound));
    return res;
  };

  if (auto cert = check_trivial_yes_c1(inst, dec, col)) {
    res.verdict = KernelVerdict::TrivialYes;
    res.certificate = std::move(cert);
    rep["certificate_length"] = res.certificate->size();
    return finish("c1");
  }
  if (static_cast<long long>(dec.c2_vertices.size()) < 28LL * k) return finish("below-28k");

  auto clean = find_clean_set(inst, dec, *inst.embedding, opts.limits);
  if (!clean) {
    res.non_tight = true;
    return finish("no-clean-set");
  }
  rep["clean_set"] = clean->I;
  rep["trim"] = to_string(clean->trim_status);
  rep["pool_size"] = clean->pool_size;
  rep["clean_source"] = to_string(clean->source.verdict);
  rep["clean_target"] = to_string(clean->target.verdict);

  struct SideInfo {
    Side side;
    const CleanClassification* cls;
    bool passes = false;
  };
  std::array<SideInfo, 2> sides{SideInfo{Side::Source, &clean->source}, SideInfo{Side::Target, &clean->target}};
  for (auto& s : sides) {
    const auto& tokens = side_tokens(inst, s.side);
    int free = free_vertex_count(inst.graph, tokens);
    bool volume = sufficient_greedy_by_volume(dec, tokens, k);
    s.passes = s.cls->verdict == CleanVerdict::Greedy || (s.cls->clean() && free >= 3);
    rep[std::string("free_") + to_string(s.side)] = free;
    rep[std::string("volume_") + to_string(s.side)] = volume;
  }
  if (sides[0].passes && sides[1].passes) {
    res.verdict = KernelVerdict::TrivialYes;
    return finish("clean-both");
  }
  const SideInfo& role = sides[0].passes ? sides[1] : sides[0];
  const auto& tokens = side_tokens(inst, role.side);
  rep["role"] = to_string(role.side);

  auto important = important_vertices(dec, tokens);
  auto coloring = color_removal(dec, tokens, important);
  rep["important"] = important;
  nlohmann::json colors = nlohmann::json::array();
  for (const auto& [key, cc] : coloring.color) {
    const auto* members = dec.find(key);
    colors.push_back({{"key", key}, {"size", members ? members->size() : 0}, {"color", to_string(cc)}});
  }
  rep["colors"] = colors;
  // Sizes after the anticomplete trimming are reported next to the thresholds used.
  auto trimmed = anticompleteify(inst.graph, locked_classes(dec, tokens), *inst.embedding, false);
  nlohmann::json trimmed_sizes = nlohmann::json::array();
  for (const auto& t : trimmed.trimmed) trimmed_sizes.push_back(t.size());
  rep["locked_trimmed_sizes"] = trimmed_sizes;

  auto rules = apply_reduction_rules(inst, dec, clean->I, coloring);
  rep["rule1_deleted"] = rules.rule1_deleted;
  rep["rule2_deleted"] = rules.rule2_deleted;
  rep["rule3_deleted"] = rules.rule3_deleted;
  res.verdict = KernelVerdict::Reduced;
  res.instance = std::move(rules.instance);
  return finish("rules");
}

}  // namespace tjk
