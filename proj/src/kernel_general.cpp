#include "tjkernel/kernel_general.hpp"

#include <algorithm>
#include <stdexcept>

#include "tjkernel/solver.hpp"

namespace tjk {

const char* to_string(KernelVerdict v) { return v == KernelVerdict::TrivialYes ? "trivial-yes" : "reduced"; }

const char* to_string(ConstructionPlan::Action a) {
  return a == ConstructionPlan::Action::KeepOnlyI ? "keep-only-I" : "keep-indep-2r";
}

namespace {

// Jumps moving `tokens` onto `middle` (independent, each vertex with at most
// one neighbour among the key vertices). Tokens adjacent to some middle vertex
// go first, onto their lowest such neighbour.
std::vector<Jump> moves_onto(const Graph& g, const std::vector<Vertex>& tokens, const std::vector<Vertex>& middle) {
  std::vector<Jump> out;
  VertexSet free = g.make_set(middle);
  std::vector<Vertex> rest;
  for (Vertex v : tokens) {
    VertexSet hit = g.neighbor_set(v) & free;
    if (hit.empty()) {
      rest.push_back(v);
      continue;
    }
    Vertex w = hit.next(0);
    free.erase(w);
    out.push_back({v, w});
  }
  for (Vertex v : rest) {
    Vertex w = free.next(0);
    free.erase(w);
    out.push_back({v, w});
  }
  return out;
}

}  // namespace

std::optional<ReconfSequence> check_trivial_yes_c1(const Instance& inst, const ProjectionDecomposition& dec,
                                                   const ColoringResult& col) {
  auto middle = extract_independent(inst.graph, dec.c1_vertices.to_vector(), inst.k, &col);
  if (!middle) return std::nullopt;
  ReconfSequence seq;
  seq.jumps = moves_onto(inst.graph, inst.source, *middle);
  auto back = moves_onto(inst.graph, inst.target, *middle);
  for (auto it = back.rbegin(); it != back.rend(); ++it) seq.jumps.push_back({it->to, it->from});
  if (!verify_sequence(inst, seq)) throw std::logic_error("C1 certificate failed verification");
  return seq;
}

std::optional<ConstructionPlan> plan_construction(const Instance& inst, const ProjectionDecomposition& dec,
                                                  const ColoringResult& col, int r) {
  const Graph& g = inst.graph;
  const long long c = col.color_count;
  const long long pool_target = static_cast<long long>(dec.n2) * (3 * r - 2) + inst.k;
  if (static_cast<long long>(dec.c2_vertices.size()) <= c * pool_target) return std::nullopt;

  auto pool = extract_independent(g, dec.c2_vertices.to_vector(), static_cast<int>(pool_target), &col);
  if (!pool) throw std::logic_error("no independent pool inside C2 despite pigeonhole threshold");

  ConstructionPlan plan;
  plan.initial_pool_size = static_cast<int>(pool->size());
  VertexSet in_pool = g.make_set(*pool);
  const long long big = c * (2 * r - 1) + 1;
  for (const auto& cls : dec.two_classes()) {
    if (static_cast<long long>(cls.members.size()) < big) {
      plan.small_classes.push_back(cls);
      continue;
    }
    ConstructionPlan::BigClass bc;
    bc.cls = cls;
    for (Vertex v : cls.members)
      if (in_pool.contains(v)) ++bc.pool_hits;
    if (bc.pool_hits >= 3 * r - 1) {
      bc.action = ConstructionPlan::Action::KeepOnlyI;
      for (Vertex v : cls.members)
        if (in_pool.contains(v)) bc.kept.push_back(v);
    } else {
      bc.action = ConstructionPlan::Action::KeepIndep2r;
      auto keep = extract_independent(g, cls.members, 2 * r, &col);
      if (!keep) throw std::logic_error("big class without an independent subset of size 2r");
      bc.kept = *keep;
      for (Vertex v : cls.members) in_pool.erase(v);
    }
    plan.big_classes.push_back(std::move(bc));
  }
  plan.helpful_pool = in_pool.to_vector();
  return plan;
}

KernelResult build_kernel_general(const Instance& inst, int r, const ColoringResult* col_override) {
  if (r < 1) throw std::invalid_argument("r must be at least 1");
  ColoringResult own;
  if (!col_override) own = degeneracy_coloring(inst.graph);
  const ColoringResult& col = col_override ? *col_override : own;
  auto dec = compute_projection(inst);
  const long long c = col.color_count;

  KernelResult res;
  auto& rep = res.report;
  rep["mode"] = "general";
  rep["r"] = r;
  rep["k"] = inst.k;
  rep["n"] = inst.n();
  rep["c"] = c;
  rep["degeneracy"] = col.degeneracy;
  rep["n2"] = dec.n2;
  rep["n3"] = dec.n3;
  rep["c1"] = dec.c1_vertices.size();
  rep["c2"] = dec.c2_vertices.size();
  rep["c3"] = dec.c3_vertices.size();
  const long long step1 = c * (static_cast<long long>(dec.n2) * (3 * r - 2) + inst.k);
  const long long c2_bound = c * (static_cast<long long>(dec.n2) * (4 * r - 1) + inst.k);
  rep["threshold_3r_minus_2"] = step1;
  rep["threshold_4r_minus_1"] = c2_bound;
  rep["c1_threshold"] = c * inst.k;

  if (auto cert = check_trivial_yes_c1(inst, dec, col)) {
    res.verdict = KernelVerdict::TrivialYes;
    res.certificate = std::move(cert);
    res.instance = inst;
    rep["verdict"] = to_string(res.verdict);
    rep["route"] = "c1";
    rep["certificate_length"] = res.certificate->size();
    return res;
  }

  auto plan = plan_construction(inst, dec, col, r);
  VertexSet doomed = inst.graph.empty_set();
  nlohmann::json actions = nlohmann::json::array();
  if (plan) {
    rep["pool_size"] = plan->initial_pool_size;
    rep["pool_after"] = plan->helpful_pool.size();
    rep["big_threshold"] = c * (2 * r - 1) + 1;
    for (const auto& bc : plan->big_classes) {
      VertexSet keep = inst.graph.make_set(bc.kept);
      for (Vertex v : bc.cls.members)
        if (!keep.contains(v)) doomed.insert(v);
      actions.push_back({{"key", {bc.cls.x, bc.cls.y}},
                         {"size", bc.cls.members.size()},
                         {"pool_hits", bc.pool_hits},
                         {"action", to_string(bc.action)},
                         {"kept", bc.kept.size()}});
    }
    rep["small_classes"] = plan->small_classes.size();
  }
  rep["step"] = plan ? "construction" : "untouched";
  rep["actions"] = actions;
  rep["deleted"] = doomed.size();

  res.verdict = KernelVerdict::Reduced;
  res.instance = doomed.empty() ? inst : delete_vertices(inst, doomed);
  const auto c2_after = dec.c2_vertices.size() - doomed.size();
  rep["c2_after"] = c2_after;
  rep["c2_bound_ok"] = static_cast<long long>(c2_after) <= c2_bound || !plan;
  rep["final_n"] = res.instance.n();
  rep["verdict"] = to_string(res.verdict);
  return res;
}

boost::multiprecision::cpp_int class_count_bound(int r) {
  using boost::multiprecision::cpp_int;
  cpp_int b = cpp_int(1) << (5 * r + 13);
  return b * boost::multiprecision::pow(cpp_int(r + 3), static_cast<unsigned>(2 * r + 5));
}

boost::multiprecision::cpp_int c1_c3_bound(int r, int k, bool planar) {
  using boost::multiprecision::cpp_int;
  if (r < 1 || k < 1) throw std::invalid_argument("r and k must be positive");
  if (planar) return cpp_int(12) * k;
  return cpp_int(k) * (std::max(r, 6300) + 3 + cpp_int(r - 1) * class_count_bound(r));
}

boost::multiprecision::cpp_int theoretical_size_bound(int r, int k, bool planar) {
  using boost::multiprecision::cpp_int;
  if (r < 1 || k < 1) throw std::invalid_argument("r and k must be positive");
  if (planar) return cpp_int(42) * k;
  const cpp_int chi = cpp_int(std::max(r, 6300) + 3);
  const cpp_int n2 = class_count_bound(r) * k;
  cpp_int c2 = chi * (n2 * (4 * r - 1) + k);
  return cpp_int(2) * k + c1_c3_bound(r, k, false) + c2;
}

}  // namespace tjk
