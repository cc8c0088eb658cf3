#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "tjkernel/harness.hpp"
#include "tjkernel/kernel_general.hpp"
#include "tjkernel/kernel_planar.hpp"
#include "tjkernel/solver.hpp"

namespace py = pybind11;
using namespace tjk;

namespace {

using JumpList = std::vector<std::pair<Vertex, Vertex>>;

JumpList to_pairs(const ReconfSequence& seq) {
  JumpList out;
  for (const auto& j : seq.jumps) out.emplace_back(j.from, j.to);
  return out;
}

// Results travel as JSON text; the Python side decodes them.
std::string solve(const std::string& text, std::uint64_t max_states, std::int64_t max_millis) {
  Instance inst = parse_instance(text);
  SolveLimits limits{max_states, max_millis};
  SolveOutcome out;
  {
    py::gil_scoped_release release;
    out = solve_bfs(inst, limits);
  }
  nlohmann::json j;
  j["verdict"] = to_string(out.verdict);
  j["states"] = out.states_explored;
  j["jumps"] = to_pairs(out.sequence);
  return j.dump();
}

std::string kernelize(const std::string& text, const std::string& mode, int r, bool strict) {
  Instance inst = parse_instance(text);
  KernelResult res;
  {
    py::gil_scoped_release release;
    if (mode == "general") {
      res = build_kernel_general(inst, r);
    } else if (mode == "planar") {
      PlanarOptions opts;
      opts.strict = strict;
      res = build_kernel_planar(inst, opts);
    } else {
      throw std::invalid_argument("mode must be 'general' or 'planar'");
    }
  }
  nlohmann::json j;
  j["verdict"] = to_string(res.verdict);
  j["non_tight"] = res.non_tight;
  j["report"] = res.report;
  j["instance"] = serialize_instance(res.instance);
  if (res.certificate) j["certificate"] = to_pairs(*res.certificate);
  return j.dump();
}

std::pair<bool, std::size_t> verify(const std::string& text, const JumpList& jumps) {
  Instance inst = parse_instance(text);
  ReconfSequence seq;
  for (auto [a, b] : jumps) seq.jumps.push_back({a, b});
  auto rep = verify_sequence(inst, seq);
  return {rep.ok, rep.failing_step};
}

std::string gen_planar(int n, int k, double keep, std::uint64_t seed) {
  return serialize_instance(gen_planar_instance({n, k, keep, seed}));
}

std::string gen_gadget(const std::string& layout, const std::string& wiring, int noise, int extra, double freeze,
                       bool planar, std::uint64_t seed) {
  GadgetParams p;
  p.layout = layout;
  p.wiring = parse_wiring(wiring);
  p.noise = noise;
  p.extra_edges = extra;
  p.freeze = freeze;
  p.planar = planar;
  p.seed = seed;
  return serialize_instance(gen_two_class_gadget(p));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Token-jumping independent set reconfiguration kernels";
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<GenerationError>(m, "GenerationError", PyExc_RuntimeError);

  m.def("solve", &solve, py::arg("text"), py::arg("max_states") = 5'000'000, py::arg("max_millis") = 60'000);
  m.def("kernelize", &kernelize, py::arg("text"), py::arg("mode") = "general", py::arg("r") = 3,
        py::arg("strict") = false);
  m.def("verify", &verify, py::arg("text"), py::arg("jumps"));
  m.def("stats", [](const std::string& text) { return instance_stats(parse_instance(text)).dump(); }, py::arg("text"));
  m.def("normalize", [](const std::string& text) { return serialize_instance(parse_instance(text)); }, py::arg("text"));
  m.def("gen_planar", &gen_planar, py::arg("n"), py::arg("k"), py::arg("keep") = 1.0, py::arg("seed") = 1);
  m.def("gen_gadget", &gen_gadget, py::arg("layout"), py::arg("wiring") = "independent", py::arg("noise") = 0,
        py::arg("extra") = 0, py::arg("freeze") = 0.0, py::arg("planar") = true, py::arg("seed") = 1);
  m.def(
      "size_bound",
      [](int r, int k, bool planar) { return theoretical_size_bound(r, k, planar).str(); }, py::arg("r"),
      py::arg("k"), py::arg("planar"));
}
