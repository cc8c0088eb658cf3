#include "tjkernel/graph.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace tjk {

Graph::Graph(int n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  adj_.resize(static_cast<std::size_t>(n));
  bits_.assign(static_cast<std::size_t>(n), VertexSet(static_cast<std::size_t>(n)));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (!g.valid(u) || !g.valid(v)) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
    if (!g.add_edge(u, v))
      throw std::invalid_argument("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  return g;
}

bool Graph::add_edge(Vertex u, Vertex v) {
  if (!valid(u) || !valid(v) || u == v) throw std::invalid_argument("bad edge");
  if (adjacent(u, v)) return false;
  auto ins = [](std::vector<Vertex>& list, Vertex w) {
    list.insert(std::lower_bound(list.begin(), list.end(), w), w);
  };
  ins(adj_[static_cast<std::size_t>(u)], v);
  ins(adj_[static_cast<std::size_t>(v)], u);
  bits_[static_cast<std::size_t>(u)].insert(v);
  bits_[static_cast<std::size_t>(v)].insert(u);
  ++edge_count_;
  return true;
}

VertexSet Graph::all() const {
  VertexSet s(static_cast<std::size_t>(n()));
  for (Vertex v = 0; v < n(); ++v) s.insert(v);
  return s;
}

VertexSet Graph::make_set(const std::vector<Vertex>& vs) const {
  VertexSet s(static_cast<std::size_t>(n()));
  for (Vertex v : vs) {
    if (!valid(v)) throw std::out_of_range("vertex id " + std::to_string(v) + " out of range");
    s.insert(v);
  }
  return s;
}

VertexSet Graph::neighborhood(const VertexSet& s) const {
  VertexSet out(static_cast<std::size_t>(n()));
  s.for_each([&](Vertex v) { out |= bits_[static_cast<std::size_t>(v)]; });
  return out;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n(); ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(const std::vector<Vertex>& keep) const {
  std::vector<Vertex> remap(static_cast<std::size_t>(n()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) remap[static_cast<std::size_t>(keep[i])] = static_cast<Vertex>(i);
  Graph h(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (Vertex w : neighbors(keep[i])) {
      Vertex j = remap[static_cast<std::size_t>(w)];
      if (j > static_cast<Vertex>(i)) h.add_edge(static_cast<Vertex>(i), j);
    }
  return h;
}

bool is_independent(const Graph& g, const std::vector<Vertex>& s) {
  return is_independent(g, g.make_set(s));
}

bool is_independent(const Graph& g, const VertexSet& s) {
  bool ok = true;
  s.for_each([&](Vertex v) {
    if (ok && g.neighbor_set(v).intersects(s)) ok = false;
  });
  return ok;
}

void validate_instance(const Instance& inst) {
  const Graph& g = inst.graph;
  if (inst.k < 1) throw std::invalid_argument("k must be at least 1");
  auto check_set = [&](const std::vector<Vertex>& s, const char* name) {
    if (static_cast<int>(s.size()) != inst.k)
      throw std::invalid_argument(std::string(name) + " set size differs from k");
    if (!std::is_sorted(s.begin(), s.end()) || std::adjacent_find(s.begin(), s.end()) != s.end())
      throw std::invalid_argument(std::string(name) + " set not sorted/duplicate-free");
    if (!is_independent(g, s)) throw std::invalid_argument(std::string(name) + " set not independent");
  };
  check_set(inst.source, "source");
  check_set(inst.target, "target");
  if (inst.graph_class.kind == GraphClass::Kind::K3rMinorFree && inst.graph_class.r < 1)
    throw std::invalid_argument("r must be at least 1");
  if (static_cast<int>(inst.original_ids.size()) != g.n())
    throw std::invalid_argument("original_ids size mismatch");
  std::set<Vertex> seen(inst.original_ids.begin(), inst.original_ids.end());
  if (seen.size() != inst.original_ids.size()) throw std::invalid_argument("original_ids not injective");
  if (inst.embedding) {
    const auto& rot = inst.embedding->order;
    if (static_cast<int>(rot.size()) != g.n()) throw std::invalid_argument("rotation system size mismatch");
    for (Vertex v = 0; v < g.n(); ++v) {
      std::vector<Vertex> sorted = rot[static_cast<std::size_t>(v)];
      std::sort(sorted.begin(), sorted.end());
      if (sorted != g.neighbors(v))
        throw std::invalid_argument("rotation of vertex " + std::to_string(v) + " is not a permutation of its neighbours");
    }
  }
}

Instance make_instance(Graph g, std::vector<Vertex> source, std::vector<Vertex> target, GraphClass cls,
                       std::optional<RotationSystem> rot) {
  Instance inst;
  std::sort(source.begin(), source.end());
  std::sort(target.begin(), target.end());
  inst.k = static_cast<int>(source.size());
  inst.original_ids.resize(static_cast<std::size_t>(g.n()));
  for (Vertex v = 0; v < g.n(); ++v) inst.original_ids[static_cast<std::size_t>(v)] = v;
  inst.graph = std::move(g);
  inst.source = std::move(source);
  inst.target = std::move(target);
  inst.graph_class = cls;
  inst.embedding = std::move(rot);
  validate_instance(inst);
  return inst;
}

namespace {

struct LineReader {
  std::size_t lineno;
  std::istringstream ss;

  template <typename T>
  T next(const char* what) {
    T value;
    if (!(ss >> value)) throw ParseError(lineno, std::string("expected ") + what);
    return value;
  }
  void expect_end() {
    std::string extra;
    if (ss >> extra) throw ParseError(lineno, "unexpected token '" + extra + "'");
  }
};

std::vector<Vertex> read_token_line(LineReader& lr, int n, const char* tag) {
  std::vector<Vertex> out;
  std::set<Vertex> seen;
  long long v;
  while (lr.ss >> v) {
    if (v < 1 || v > n) throw ParseError(lr.lineno, std::string("vertex out of range in ") + tag + "-line");
    if (!seen.insert(static_cast<Vertex>(v - 1)).second)
      throw ParseError(lr.lineno, std::string("duplicate vertex in ") + tag + "-line");
    out.push_back(static_cast<Vertex>(v - 1));
  }
  if (!lr.ss.eof()) throw ParseError(lr.lineno, std::string("malformed ") + tag + "-line");
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Instance parse_instance(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  int n = 0, k = 0;
  long long m = 0;
  Graph g;
  std::size_t edges_read = 0;
  std::optional<std::vector<Vertex>> src, tgt;
  std::size_t src_line = 0, tgt_line = 0;
  std::optional<GraphClass> cls;
  std::map<Vertex, std::pair<std::size_t, std::vector<Vertex>>> rot_lines;

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    LineReader lr{lineno, std::istringstream(line)};
    std::string tag;
    if (!(lr.ss >> tag)) continue;
    if (tag == "c") continue;
    if (!have_header) {
      if (tag != "p") throw ParseError(lineno, "expected 'p tjisr' header before '" + tag + "'");
      if (lr.next<std::string>("format") != "tjisr") throw ParseError(lineno, "unknown format, expected tjisr");
      long long nn = lr.next<long long>("n"), kk;
      m = lr.next<long long>("m");
      kk = lr.next<long long>("k");
      lr.expect_end();
      if (nn < 0 || m < 0 || kk < 1) throw ParseError(lineno, "invalid header values");
      n = static_cast<int>(nn);
      k = static_cast<int>(kk);
      g = Graph(n);
      have_header = true;
      continue;
    }
    if (tag == "p") throw ParseError(lineno, "duplicate header");
    if (tag == "e") {
      long long u = lr.next<long long>("edge endpoint"), v = lr.next<long long>("edge endpoint");
      lr.expect_end();
      if (u < 1 || u > n || v < 1 || v > n) throw ParseError(lineno, "edge endpoint out of range");
      if (u == v) throw ParseError(lineno, "self-loop");
      if (!g.add_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)))
        throw ParseError(lineno, "duplicate edge");
      ++edges_read;
    } else if (tag == "s" || tag == "t") {
      auto& slot = tag == "s" ? src : tgt;
      if (slot) throw ParseError(lineno, "duplicate " + tag + "-line");
      slot = read_token_line(lr, n, tag.c_str());
      (tag == "s" ? src_line : tgt_line) = lineno;
    } else if (tag == "g") {
      if (cls) throw ParseError(lineno, "duplicate g-line");
      auto kind = lr.next<std::string>("graph class");
      if (kind == "planar") {
        cls = GraphClass::planar();
      } else if (kind == "k3r") {
        long long r = lr.next<long long>("r");
        if (r < 1) throw ParseError(lineno, "r must be at least 1");
        cls = GraphClass::k3r(static_cast<int>(r));
      } else {
        throw ParseError(lineno, "unknown graph class '" + kind + "'");
      }
      lr.expect_end();
    } else if (tag == "r") {
      long long v = lr.next<long long>("rotation vertex");
      if (v < 1 || v > n) throw ParseError(lineno, "rotation vertex out of range");
      if (lr.next<std::string>("':'") != ":") throw ParseError(lineno, "expected ':' in rotation line");
      std::vector<Vertex> order;
      long long w;
      while (lr.ss >> w) {
        if (w < 1 || w > n) throw ParseError(lineno, "rotation neighbour out of range");
        order.push_back(static_cast<Vertex>(w - 1));
      }
      if (!lr.ss.eof()) throw ParseError(lineno, "malformed rotation line");
      if (!rot_lines.emplace(static_cast<Vertex>(v - 1), std::make_pair(lineno, std::move(order))).second)
        throw ParseError(lineno, "duplicate rotation line");
    } else {
      throw ParseError(lineno, "unknown line tag '" + tag + "'");
    }
  }
  if (!have_header) throw ParseError(lineno, "missing 'p tjisr' header");
  if (static_cast<long long>(edges_read) != m)
    throw ParseError(lineno, "header declares " + std::to_string(m) + " edges, found " + std::to_string(edges_read));
  if (!src) throw ParseError(lineno, "missing s-line");
  if (!tgt) throw ParseError(lineno, "missing t-line");
  if (!cls) throw ParseError(lineno, "missing g-line");
  if (static_cast<int>(src->size()) != k) throw ParseError(src_line, "s-line size differs from k");
  if (static_cast<int>(tgt->size()) != k) throw ParseError(tgt_line, "t-line size differs from k");
  if (!is_independent(g, *src)) throw ParseError(src_line, "source set not independent");
  if (!is_independent(g, *tgt)) throw ParseError(tgt_line, "target set not independent");

  std::optional<RotationSystem> rot;
  if (!rot_lines.empty()) {
    if (static_cast<int>(rot_lines.size()) != n)
      throw ParseError(lineno, "rotation lines must be given for every vertex or none");
    rot = RotationSystem{};
    rot->order.resize(static_cast<std::size_t>(n));
    for (auto& [v, entry] : rot_lines) {
      std::vector<Vertex> sorted = entry.second;
      std::sort(sorted.begin(), sorted.end());
      if (sorted != g.neighbors(v))
        throw ParseError(entry.first, "rotation line inconsistent with edges");
      rot->order[static_cast<std::size_t>(v)] = std::move(entry.second);
    }
  }
  return make_instance(std::move(g), std::move(*src), std::move(*tgt), *cls, std::move(rot));
}

Instance parse_instance(const std::string& text) {
  std::istringstream ss(text);
  return parse_instance(ss);
}

void write_instance(std::ostream& out, const Instance& inst) {
  const Graph& g = inst.graph;
  out << "p tjisr " << g.n() << ' ' << g.edge_count() << ' ' << inst.k << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  out << 's';
  for (Vertex v : inst.source) out << ' ' << v + 1;
  out << "\nt";
  for (Vertex v : inst.target) out << ' ' << v + 1;
  out << '\n';
  if (inst.graph_class.is_planar())
    out << "g planar\n";
  else
    out << "g k3r " << inst.graph_class.r << '\n';
  if (inst.embedding) {
    for (Vertex v = 0; v < g.n(); ++v) {
      out << "r " << v + 1 << " :";
      for (Vertex w : inst.embedding->order[static_cast<std::size_t>(v)]) out << ' ' << w + 1;
      out << '\n';
    }
  }
  for (Vertex v = 0; v < g.n(); ++v)
    out << "c orig " << v + 1 << ' ' << inst.original_ids[static_cast<std::size_t>(v)] + 1 << '\n';
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream ss;
  write_instance(ss, inst);
  return ss.str();
}

Instance delete_vertices(const Instance& inst, const VertexSet& doomed) {
  const Graph& g = inst.graph;
  if (doomed.intersects(inst.key_set())) throw std::invalid_argument("cannot delete a token vertex");
  std::vector<Vertex> keep;
  std::vector<Vertex> remap(static_cast<std::size_t>(g.n()), -1);
  for (Vertex v = 0; v < g.n(); ++v)
    if (!doomed.contains(v)) {
      remap[static_cast<std::size_t>(v)] = static_cast<Vertex>(keep.size());
      keep.push_back(v);
    }
  Instance out;
  out.graph = g.induced(keep);
  out.k = inst.k;
  out.graph_class = inst.graph_class;
  auto map_set = [&](const std::vector<Vertex>& s) {
    std::vector<Vertex> r;
    for (Vertex v : s) r.push_back(remap[static_cast<std::size_t>(v)]);
    return r;
  };
  out.source = map_set(inst.source);
  out.target = map_set(inst.target);
  for (Vertex v : keep) out.original_ids.push_back(inst.original_ids[static_cast<std::size_t>(v)]);
  if (inst.embedding) {
    RotationSystem rot;
    for (Vertex v : keep) {
      std::vector<Vertex> order;
      for (Vertex w : inst.embedding->order[static_cast<std::size_t>(v)])
        if (!doomed.contains(w)) order.push_back(remap[static_cast<std::size_t>(w)]);
      rot.order.push_back(std::move(order));
    }
    out.embedding = std::move(rot);
  }
  return out;
}

Instance delete_vertices(const Instance& inst, const std::vector<Vertex>& doomed) {
  return delete_vertices(inst, inst.graph.make_set(doomed));
}

ReconfSequence parse_sequence(std::istream& in) {
  ReconfSequence seq;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    LineReader lr{lineno, std::istringstream(line)};
    std::string tag;
    if (!(lr.ss >> tag) || tag == "c") continue;
    if (tag != "j") continue;  // solver output also carries verdict lines
    long long a = lr.next<long long>("from"), b = lr.next<long long>("to");
    lr.expect_end();
    if (a < 1 || b < 1) throw ParseError(lineno, "vertex ids are 1-indexed");
    seq.jumps.push_back({static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1)});
  }
  return seq;
}

void write_sequence(std::ostream& out, const ReconfSequence& seq) {
  for (const auto& j : seq.jumps) out << "j " << j.from + 1 << ' ' << j.to + 1 << '\n';
}

}  // namespace tjk
