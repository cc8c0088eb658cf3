#include "tjkernel/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "tjkernel/embedding.hpp"
#include "tjkernel/kernel_general.hpp"
#include "tjkernel/kernel_planar.hpp"
#include "tjkernel/projection.hpp"

namespace tjk {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below needs a positive bound");
  // Rejection keeps the mapping exactly uniform.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  while (true) {
    std::uint64_t x = next();
    if (x < limit) return x % bound;
  }
}

namespace {

// Random maximal independent set in a random order, truncated to k.
std::optional<std::vector<Vertex>> random_independent(const Graph& g, int k, Rng& rng) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Vertex> order(static_cast<std::size_t>(g.n()));
    for (Vertex v = 0; v < g.n(); ++v) order[static_cast<std::size_t>(v)] = v;
    rng.shuffle(order);
    VertexSet chosen = g.empty_set();
    std::vector<Vertex> picked;
    for (Vertex v : order)
      if (!g.neighbor_set(v).intersects(chosen)) {
        chosen.insert(v);
        picked.push_back(v);
      }
    if (static_cast<int>(picked.size()) >= k) {
      picked.resize(static_cast<std::size_t>(k));
      std::sort(picked.begin(), picked.end());
      return picked;
    }
  }
  return std::nullopt;
}

RotationSystem remove_edges(const RotationSystem& rot, const Graph& keep) {
  RotationSystem out = rot;
  for (std::size_t v = 0; v < out.order.size(); ++v) {
    auto& o = out.order[v];
    o.erase(std::remove_if(o.begin(), o.end(), [&](Vertex w) { return !keep.adjacent(static_cast<Vertex>(v), w); }),
            o.end());
  }
  return out;
}

// Attaches a new vertex to `attach` inside a face that contains all of them,
// preferring faces that see the most `keys` (then the longest face) so later
// classes on other key pairs still find a common face.
Vertex place_vertex(EmbeddingBuilder& b, std::vector<Vertex> attach, const std::vector<Vertex>& keys = {}) {
  // Isolated vertices go last so the first edge lands inside a real face.
  std::stable_partition(attach.begin(), attach.end(),
                        [&](Vertex a) { return !b.rotation().order[static_cast<std::size_t>(a)].empty(); });
  bool any_edges = false;
  for (Vertex a : attach) any_edges |= !b.rotation().order[static_cast<std::size_t>(a)].empty();
  if (attach.size() <= 1 || !any_edges) return b.add_vertex_in_face(attach);
  Embedding emb(b.rotation());
  const auto faces = emb.faces();
  const std::vector<Dart>* best = nullptr;
  std::optional<Dart> best_hint;
  std::pair<std::size_t, std::size_t> best_score{0, 0};
  for (const auto& face : faces) {
    bool all = true;
    std::optional<Dart> hint;
    for (Vertex a : attach) {
      bool on = b.rotation().order[static_cast<std::size_t>(a)].empty();
      for (const Dart& d : face)
        if (d.to == a) {
          on = true;
          if (a == attach[0] && !hint) hint = d;
        }
      all &= on;
    }
    if (!all) continue;
    std::size_t seen = 0;
    for (Vertex key : keys)
      seen += std::any_of(face.begin(), face.end(), [&](const Dart& d) { return d.to == key; }) ? 1 : 0;
    std::pair<std::size_t, std::size_t> score{seen, face.size()};
    if (!best || score > best_score) {
      best = &face;
      best_hint = hint;
      best_score = score;
    }
  }
  if (!best) throw GenerationError("no face holds all attachment vertices");
  if (b.rotation().order[static_cast<std::size_t>(attach[0])].empty()) best_hint.reset();
  Vertex w = b.add_vertex_in_face({attach[0]}, best_hint);
  // Later edges split the smallest face holding both ends, leaving big faces intact.
  for (std::size_t i = 1; i < attach.size(); ++i) {
    const Vertex a = attach[i];
    std::optional<Dart> hint;
    std::size_t best_size = 0;
    if (!b.rotation().order[static_cast<std::size_t>(a)].empty()) {
      for (const auto& face : Embedding(b.rotation()).faces()) {
        auto at_w = std::find_if(face.begin(), face.end(), [&](const Dart& d) { return d.to == w; });
        bool has_a = std::any_of(face.begin(), face.end(), [&](const Dart& d) { return d.to == a; });
        if (at_w != face.end() && has_a && (!hint || face.size() < best_size)) {
          hint = *at_w;
          best_size = face.size();
        }
      }
      if (!hint) throw GenerationError("attachment vertices do not share a face");
    }
    b.add_edge_in_face(w, a, hint);
  }
  return w;
}

// New vertex joined to `anchor` and to a second vertex of `side` sharing a
// face with it; a plain pendant when no such vertex exists.
Vertex place_near_two(EmbeddingBuilder& b, Vertex anchor, const std::vector<Vertex>& side) {
  for (Vertex other : side) {
    if (other == anchor) continue;
    try {
      return place_vertex(b, {anchor, other});
    } catch (const GenerationError&) {
    }
  }
  return place_vertex(b, {anchor});
}

Instance relabel(const Graph& g, const RotationSystem* rot, std::vector<Vertex> src, std::vector<Vertex> tgt,
                 GraphClass cls, Rng& rng) {
  const int n = g.n();
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) perm[static_cast<std::size_t>(v)] = v;
  rng.shuffle(perm);
  auto map = [&](Vertex v) { return perm[static_cast<std::size_t>(v)]; };
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(map(u), map(v));
  Graph h = Graph::from_edges(n, edges);
  std::optional<RotationSystem> r2;
  if (rot) {
    RotationSystem out;
    out.order.resize(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v)
      for (Vertex w : rot->order[static_cast<std::size_t>(v)]) out.order[static_cast<std::size_t>(map(v))].push_back(map(w));
    r2 = std::move(out);
  }
  for (auto& v : src) v = map(v);
  for (auto& v : tgt) v = map(v);
  return make_instance(std::move(h), std::move(src), std::move(tgt), cls, std::move(r2));
}

}  // namespace

Instance gen_planar_instance(const PlanarParams& p) {
  if (p.n < 4) throw std::invalid_argument("planar generator needs n >= 4");
  if (p.k < 1) throw std::invalid_argument("k must be positive");
  Rng rng(p.seed);
  EmbeddingBuilder b(3);
  b.add_edge_in_face(0, 1);
  b.add_edge_in_face(1, 2);
  b.add_edge_in_face(2, 0);
  while (b.n() < p.n) {
    Embedding emb(b.rotation());
    auto faces = emb.faces();
    const auto& face = faces[rng.below(faces.size())];
    b.add_vertex_in_face({face[0].to, face[1].to, face[2].to}, face[0]);
  }
  Graph full = b.graph();
  // Spanning tree by BFS from 0; every other edge survives with probability keep.
  std::vector<Vertex> parent(static_cast<std::size_t>(full.n()), -1);
  std::vector<Vertex> queue{0};
  parent[0] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (Vertex w : full.neighbors(queue[i]))
      if (parent[static_cast<std::size_t>(w)] < 0) {
        parent[static_cast<std::size_t>(w)] = queue[i];
        queue.push_back(w);
      }
  Graph g(full.n());
  for (auto [u, v] : full.edges()) {
    bool tree = parent[static_cast<std::size_t>(v)] == u || parent[static_cast<std::size_t>(u)] == v;
    if (tree || rng.uniform() < p.keep) g.add_edge(u, v);
  }
  RotationSystem rot = remove_edges(b.rotation(), g);
  auto src = random_independent(g, p.k, rng);
  auto tgt = random_independent(g, p.k, rng);
  if (!src || !tgt) throw GenerationError("no independent set of size " + std::to_string(p.k));
  return make_instance(std::move(g), std::move(*src), std::move(*tgt), GraphClass::planar(), std::move(rot));
}

const char* to_string(Wiring w) {
  switch (w) {
    case Wiring::Independent: return "independent";
    case Wiring::Path: return "path";
    case Wiring::Cycle: return "cycle";
    case Wiring::SharedKey: return "shared";
  }
  return "?";
}

const char* to_string(KeyMode m) {
  switch (m) {
    case KeyMode::SourceSource: return "ss";
    case KeyMode::SourceTarget: return "st";
    case KeyMode::TargetTarget: return "tt";
  }
  return "?";
}

Wiring parse_wiring(const std::string& s) {
  if (s == "independent") return Wiring::Independent;
  if (s == "path") return Wiring::Path;
  if (s == "cycle") return Wiring::Cycle;
  if (s == "shared") return Wiring::SharedKey;
  throw std::invalid_argument("unknown wiring '" + s + "'");
}

KeyMode parse_key_mode(const std::string& s) {
  if (s == "ss") return KeyMode::SourceSource;
  if (s == "st") return KeyMode::SourceTarget;
  if (s == "tt") return KeyMode::TargetTarget;
  throw std::invalid_argument("unknown key mode '" + s + "'");
}

namespace {

struct ClassPlan {
  Vertex a, b;
  int size;
};

// Parses "S0-S1:6,S0-T0:40"; key labels become vertices on first use.
std::vector<ClassPlan> layout_classes(const std::string& layout, EmbeddingBuilder& b, std::vector<Vertex>& src,
                                      std::vector<Vertex>& tgt) {
  std::map<std::string, Vertex> label;
  auto key = [&](const std::string& name) {
    if (name.size() < 2 || (name[0] != 'S' && name[0] != 'T'))
      throw std::invalid_argument("bad key label '" + name + "'");
    auto it = label.find(name);
    if (it != label.end()) return it->second;
    Vertex v = b.add_vertex();
    (name[0] == 'S' ? src : tgt).push_back(v);
    label.emplace(name, v);
    return v;
  };
  std::vector<ClassPlan> out;
  std::stringstream ss(layout);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto dash = item.find('-');
    auto colon = item.find(':');
    if (dash == std::string::npos || colon == std::string::npos || colon < dash)
      throw std::invalid_argument("bad layout item '" + item + "'");
    Vertex x = key(item.substr(0, dash));
    Vertex y = key(item.substr(dash + 1, colon - dash - 1));
    if (x == y) throw std::invalid_argument("layout class needs two distinct keys");
    int size = std::stoi(item.substr(colon + 1));
    if (size < 1) throw std::invalid_argument("class sizes must be positive");
    out.push_back({x, y, size});
  }
  return out;
}

}  // namespace

Instance gen_two_class_gadget(const GadgetParams& p) {
  Rng rng(p.seed);
  EmbeddingBuilder b;
  std::vector<Vertex> src, tgt;
  const bool shared = p.wiring == Wiring::SharedKey;
  const Wiring members = shared ? p.member_wiring : p.wiring;

  std::vector<ClassPlan> plan;
  if (!p.layout.empty()) {
    plan = layout_classes(p.layout, b, src, tgt);
  } else {
    if (p.class_sizes.empty()) throw std::invalid_argument("gadget needs at least one class");
    for (int s : p.class_sizes)
      if (s < 1) throw std::invalid_argument("class sizes must be positive");
    auto assign = [&](Vertex v, bool first_key) {
      bool source = p.keys == KeyMode::SourceSource || (p.keys == KeyMode::SourceTarget && first_key);
      (source ? src : tgt).push_back(v);
    };
    Vertex hub = -1;
    if (shared) {
      hub = b.add_vertex();
      assign(hub, true);
    }
    for (int size : p.class_sizes) {
      Vertex a = shared ? hub : b.add_vertex();
      if (!shared) assign(a, true);
      Vertex c = b.add_vertex();
      assign(c, false);
      plan.push_back({a, c, size});
    }
  }
  std::vector<Vertex> all_keys = src;
  all_keys.insert(all_keys.end(), tgt.begin(), tgt.end());
  for (const auto& cls : plan) {
    std::vector<Vertex> fan;
    for (int i = 0; i < cls.size; ++i) {
      std::vector<Vertex> attach{cls.a, cls.b};
      if (members != Wiring::Independent && !fan.empty()) attach.push_back(fan.back());
      fan.push_back(place_vertex(b, attach, all_keys));
    }
    if (members == Wiring::Cycle && fan.size() >= 3) {
      try {
        b.add_edge_in_face(fan.back(), fan.front());
      } catch (const std::logic_error&) {
        throw GenerationError("cycle wiring cannot be embedded here");
      }
    }
  }
  // Balance the sides with pendants hanging off the larger side.
  std::size_t partner = 0;
  while (src.size() != tgt.size()) {
    bool need_target = src.size() > tgt.size();
    const auto& other = need_target ? src : tgt;
    Vertex anchor = other[partner++ % other.size()];
    Vertex w = p.freeze > 0 && rng.uniform() < p.freeze ? place_near_two(b, anchor, other) : place_vertex(b, {anchor});
    (need_target ? tgt : src).push_back(w);
  }
  for (int i = 0; i < p.k_pad; ++i) {
    Vertex s = b.add_vertex();
    Vertex t = b.add_vertex();
    b.add_edge_in_face(s, t);
    src.push_back(s);
    tgt.push_back(t);
  }
  std::vector<Vertex> keys = src;
  keys.insert(keys.end(), tgt.begin(), tgt.end());
  for (int i = 0; i < p.noise; ++i) {
    Vertex anchor = keys[rng.below(keys.size())];
    if (p.freeze > 0 && rng.uniform() < p.freeze)
      place_near_two(b, anchor, std::find(src.begin(), src.end(), anchor) != src.end() ? src : tgt);
    else
      place_vertex(b, {anchor});
  }

  VertexSet in_src(static_cast<std::size_t>(b.n())), in_tgt(static_cast<std::size_t>(b.n()));
  for (Vertex v : src) in_src.insert(v);
  for (Vertex v : tgt) in_tgt.insert(v);
  for (int added = 0, tries = 0; added < p.extra_edges && tries < 50 * (p.extra_edges + 1); ++tries) {
    Embedding emb(b.rotation());
    auto faces = emb.faces();
    if (faces.empty()) break;
    const auto& face = faces[rng.below(faces.size())];
    Vertex u = face[rng.below(face.size())].to, v = face[rng.below(face.size())].to;
    if (u == v) continue;
    const auto& ru = b.rotation().order[static_cast<std::size_t>(u)];
    if (std::find(ru.begin(), ru.end(), v) != ru.end()) continue;
    if ((in_src.contains(u) && in_src.contains(v)) || (in_tgt.contains(u) && in_tgt.contains(v))) continue;
    b.add_edge_in_face(u, v, face[0]);
    ++added;
  }
  Graph g = b.graph();
  GraphClass cls = p.planar ? GraphClass::planar() : GraphClass::k3r(p.r);
  RotationSystem rot = b.rotation();
  std::sort(src.begin(), src.end());
  std::sort(tgt.begin(), tgt.end());
  return relabel(g, p.planar ? &rot : nullptr, src, tgt, cls, rng);
}

const char* to_string(KernelMode m) { return m == KernelMode::General ? "general" : "planar"; }

nlohmann::json TrialReport::to_json() const {
  nlohmann::json j;
  j["id"] = id;
  j["seed"] = seed;
  j["mode"] = to_string(mode);
  j["n"] = n;
  j["m"] = m;
  j["k"] = k;
  j["kernel_verdict"] = kernel_verdict;
  j["original"] = original_verdict;
  j["kernel_instance"] = kernel_instance_verdict;
  j["kernel_n"] = kernel_n;
  j["certificate_ok"] = certificate_ok;
  j["agreement"] = agreement;
  j["inconclusive"] = inconclusive;
  if (!error.empty()) j["error"] = error;
  j["millis"] = millis;
  j["report"] = kernel_report;
  return j;
}

TrialReport equivalence_trial(const Instance& inst, const TrialOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  TrialReport rep;
  rep.mode = opts.mode;
  rep.n = inst.n();
  rep.m = inst.graph.edge_count();
  rep.k = inst.k;
  auto original = solve_bfs(inst, opts.limits);
  rep.original_verdict = to_string(original.verdict);
  if (original.verdict == SolveVerdict::Yes && !verify_sequence(inst, original.sequence)) {
    rep.error = "solver sequence failed verification";
  }
  try {
    KernelResult kr = opts.mode == KernelMode::General
                          ? build_kernel_general(inst, opts.r, opts.coloring)
                          : build_kernel_planar(inst, PlanarOptions{opts.strict, opts.coloring, {}});
    rep.kernel_verdict = to_string(kr.verdict);
    rep.kernel_report = kr.report;
    rep.kernel_n = kr.instance.n();
    if (kr.certificate) rep.certificate_ok = static_cast<bool>(verify_sequence(inst, *kr.certificate));
    if (original.verdict == SolveVerdict::ResourceLimit) {
      rep.inconclusive = true;
    } else if (kr.verdict == KernelVerdict::TrivialYes) {
      rep.agreement = original.verdict == SolveVerdict::Yes && rep.certificate_ok;
    } else {
      auto reduced = solve_bfs(kr.instance, opts.limits);
      rep.kernel_instance_verdict = to_string(reduced.verdict);
      if (reduced.verdict == SolveVerdict::ResourceLimit)
        rep.inconclusive = true;
      else
        rep.agreement = reduced.verdict == original.verdict;
    }
  } catch (const std::exception& e) {
    rep.error = e.what();
    rep.agreement = false;
  }
  if (!rep.error.empty()) rep.agreement = false;
  rep.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

namespace {

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

}  // namespace

std::vector<ManifestEntry> parse_manifest(std::istream& in) {
  std::vector<ManifestEntry> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    ManifestEntry e;
    if (!(ss >> e.id)) continue;
    std::map<std::string, std::string> kv;
    std::string tok;
    while (ss >> tok) {
      auto eq = tok.find('=');
      if (eq == std::string::npos) throw ParseError(lineno, "expected key=value, got '" + tok + "'");
      std::string key = tok.substr(0, eq);
      static const std::set<std::string> known{"gen",   "mode", "r",     "strict", "declare", "n",     "k",
                                               "keep",  "seed", "sizes", "wiring", "members", "keys",  "pad",
                                               "noise", "extra", "layout", "freeze"};
      if (!known.contains(key)) throw ParseError(lineno, "unknown key '" + key + "'");
      kv[key] = tok.substr(eq + 1);
    }
    auto get = [&](const std::string& key, const std::string& def) {
      auto it = kv.find(key);
      return it == kv.end() ? def : it->second;
    };
    try {
      std::string mode = get("mode", "general");
      if (mode != "general" && mode != "planar") throw std::invalid_argument("unknown mode '" + mode + "'");
      e.mode = mode == "general" ? KernelMode::General : KernelMode::Planar;
      e.r = std::stoi(get("r", "3"));
      e.strict = get("strict", "0") == "1";
      e.declare_k3r = get("declare", "planar") == "k3r";
      e.generator = get("gen", "planar");
      std::uint64_t seed = std::stoull(get("seed", "1"));
      if (e.generator == "planar") {
        e.planar.n = std::stoi(get("n", "12"));
        e.planar.k = std::stoi(get("k", "2"));
        e.planar.keep = std::stod(get("keep", "1"));
        e.planar.seed = seed;
      } else if (e.generator == "gadget") {
        e.gadget.planar = !e.declare_k3r;
        e.gadget.r = e.r;
        e.gadget.class_sizes = parse_int_list(get("sizes", "7"));
        e.gadget.wiring = parse_wiring(get("wiring", "independent"));
        e.gadget.member_wiring = parse_wiring(get("members", "independent"));
        e.gadget.keys = parse_key_mode(get("keys", "ss"));
        e.gadget.k_pad = std::stoi(get("pad", "0"));
        e.gadget.noise = std::stoi(get("noise", "0"));
        e.gadget.extra_edges = std::stoi(get("extra", "0"));
        e.gadget.layout = get("layout", "");
        e.gadget.freeze = std::stod(get("freeze", "0"));
        e.gadget.seed = seed;
      } else {
        throw std::invalid_argument("unknown generator '" + e.generator + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& ex) {
      throw ParseError(lineno, ex.what());
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::uint64_t entry_seed(const ManifestEntry& e) { return e.generator == "planar" ? e.planar.seed : e.gadget.seed; }

Instance generate(const ManifestEntry& e) {
  Instance inst = e.generator == "planar" ? gen_planar_instance(e.planar) : gen_two_class_gadget(e.gadget);
  if (e.declare_k3r) {
    inst.graph_class = GraphClass::k3r(e.r);
    inst.embedding.reset();
  }
  return inst;
}

std::vector<TrialReport> run_manifest(const std::vector<ManifestEntry>& entries, int threads,
                                      const SolveLimits& limits) {
  std::vector<TrialReport> out(entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) {
      const auto& e = entries[i];
      TrialReport rep;
      try {
        Instance inst = generate(e);
        TrialOptions opts;
        opts.mode = e.mode;
        opts.r = e.r;
        opts.strict = e.strict;
        opts.limits = limits;
        rep = equivalence_trial(inst, opts);
      } catch (const std::exception& ex) {
        rep.mode = e.mode;
        rep.error = std::string("generation failed: ") + ex.what();
      }
      rep.id = e.id;
      rep.seed = entry_seed(e);
      out[i] = std::move(rep);
    }
  };
  int t = std::max(1, threads);
  std::vector<std::thread> pool;
  for (int i = 0; i < t; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return out;
}

nlohmann::json instance_stats(const Instance& inst) {
  auto dec = compute_projection(inst);
  auto col = degeneracy_coloring(inst.graph);
  nlohmann::json j;
  const auto x = dec.X.size();
  j["n"] = inst.n();
  j["m"] = inst.graph.edge_count();
  j["k"] = inst.k;
  j["X"] = x;
  j["c1"] = dec.c1_vertices.size();
  j["c2"] = dec.c2_vertices.size();
  j["c3"] = dec.c3_vertices.size();
  j["n2"] = dec.n2;
  j["n3"] = dec.n3;
  j["degeneracy"] = col.degeneracy;
  j["colors"] = col.color_count;
  std::map<std::size_t, int> hist;
  std::size_t max_c3 = 0;
  for (const auto& [key, members] : dec.classes) {
    if (key.size() == 2) ++hist[members.size()];
    if (key.size() >= 3) max_c3 = std::max(max_c3, members.size());
  }
  nlohmann::json h = nlohmann::json::object();
  for (auto [size, count] : hist) h[std::to_string(size)] = count;
  j["two_class_sizes"] = h;
  j["max_three_class"] = max_c3;
  j["n2_margin"] = 3 * static_cast<long long>(x) - dec.n2;
  j["n3_margin"] = 2 * static_cast<long long>(x) - dec.n3;
  if (inst.embedding) {
    auto rep = validate_rotation_system(inst.graph, *inst.embedding);
    j["embedding_ok"] = rep.accepted;
    j["faces"] = rep.faces;
  }
  return j;
}

}  // namespace tjk
