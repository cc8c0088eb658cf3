// Command line front end: gen, stats, kernelize, solve, verify, trial.
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "tjkernel/harness.hpp"
#include "tjkernel/kernel_general.hpp"
#include "tjkernel/kernel_planar.hpp"

using namespace tjk;

namespace {

Instance load(const std::string& path) {
  if (path == "-") return parse_instance(std::cin);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_instance(in);
}

std::ostream& open_out(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot write " + path);
  return file;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Token-jumping independent set reconfiguration kernels"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate an instance");
  std::string gen_kind = "planar", gen_out, sizes = "7", wiring = "independent", members = "independent", keys = "ss";
  PlanarParams pp;
  GadgetParams gp;
  bool gen_k3r = false;
  gen->add_option("--kind", gen_kind, "planar or gadget")->check(CLI::IsMember({"planar", "gadget"}));
  gen->add_option("--n", pp.n, "vertex count (planar)");
  gen->add_option("--k", pp.k, "token count (planar)");
  gen->add_option("--keep", pp.keep, "edge keep probability (planar)");
  gen->add_option("--freeze", gp.freeze, "chance of a second same-side neighbour (gadget)");
  gen->add_option("--seed", pp.seed, "seed");
  gen->add_option("--sizes", sizes, "comma separated class sizes (gadget)");
  gen->add_option("--wiring", wiring, "independent, path, cycle or shared");
  gen->add_option("--members", members, "member wiring under shared keys");
  gen->add_option("--keys", keys, "ss, st or tt");
  gen->add_option("--pad", gp.k_pad, "extra token edges");
  gen->add_option("--noise", gp.noise, "pendant noise vertices");
  gen->add_option("--extra", gp.extra_edges, "random extra edges");
  gen->add_option("--layout", gp.layout, "explicit classes, e.g. S0-S1:6,S0-T0:40");
  gen->add_option("--r", gp.r, "declared r for --k3r");
  gen->add_flag("--k3r", gen_k3r, "declare K_{3,r}-minor-free and drop the embedding");
  gen->add_option("-o,--out", gen_out, "output file");

  // stats
  auto* stats = app.add_subcommand("stats", "print projection statistics as JSON");
  std::string stats_in = "-";
  stats->add_option("input", stats_in, "instance file")->required();

  // kernelize
  auto* ker = app.add_subcommand("kernelize", "kernelize an instance");
  std::string ker_in = "-", ker_mode = "general", ker_out, ker_report, coloring_path;
  int ker_r = 3;
  bool strict = false;
  ker->add_option("input", ker_in, "instance file")->required();
  ker->add_option("--mode", ker_mode, "general or planar")->check(CLI::IsMember({"general", "planar"}));
  ker->add_option("--r", ker_r, "r for general mode");
  ker->add_flag("--strict", strict, "fail when the planar size bound is exceeded");
  ker->add_option("--coloring", coloring_path, "proper colouring file (col v c lines)");
  ker->add_option("-o,--out", ker_out, "kernel instance output");
  ker->add_option("--report", ker_report, "JSON-lines report output (default stderr)");

  // solve
  auto* solve = app.add_subcommand("solve", "decide an instance by breadth-first search");
  std::string solve_in = "-";
  SolveLimits limits;
  solve->add_option("input", solve_in, "instance file")->required();
  solve->add_option("--limit-states", limits.max_states, "state budget");
  solve->add_option("--limit-ms", limits.max_millis, "time budget in milliseconds");

  // verify
  auto* verify = app.add_subcommand("verify", "replay a jump sequence");
  std::string verify_in, verify_seq;
  verify->add_option("input", verify_in, "instance file")->required();
  verify->add_option("seqfile", verify_seq, "sequence file (j from to lines)")->required();

  // trial
  auto* trial = app.add_subcommand("trial", "run a manifest of equivalence trials");
  std::string manifest, trial_out;
  int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  trial->add_option("--manifest", manifest, "manifest file")->required();
  trial->add_option("--out", trial_out, "JSONL report");
  trial->add_option("--threads", threads, "worker threads");
  trial->add_option("--limit-states", limits.max_states, "state budget per solve");
  trial->add_option("--limit-ms", limits.max_millis, "time budget per solve");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      Instance inst;
      if (gen_kind == "planar") {
        inst = gen_planar_instance(pp);
        if (gen_k3r) {
          inst.graph_class = GraphClass::k3r(gp.r);
          inst.embedding.reset();
        }
      } else {
        std::stringstream ss(sizes);
        std::string item;
        gp.class_sizes.clear();
        while (std::getline(ss, item, ',')) gp.class_sizes.push_back(std::stoi(item));
        gp.wiring = parse_wiring(wiring);
        gp.member_wiring = parse_wiring(members);
        gp.keys = parse_key_mode(keys);
        gp.planar = !gen_k3r;
        gp.seed = pp.seed;
        inst = gen_two_class_gadget(gp);
      }
      std::ofstream f;
      write_instance(open_out(gen_out, f), inst);
      return 0;
    }
    if (*stats) {
      std::cout << instance_stats(load(stats_in)).dump(2) << "\n";
      return 0;
    }
    if (*ker) {
      Instance inst = load(ker_in);
      std::optional<ColoringResult> col;
      if (!coloring_path.empty()) {
        std::ifstream cf(coloring_path);
        if (!cf) throw std::runtime_error("cannot open " + coloring_path);
        col = parse_coloring(cf, inst.graph);
      }
      KernelResult res = ker_mode == "general"
                             ? build_kernel_general(inst, ker_r, col ? &*col : nullptr)
                             : build_kernel_planar(inst, PlanarOptions{strict, col ? &*col : nullptr, {}});
      std::ofstream f;
      std::ostream& out = open_out(ker_out, f);
      if (res.verdict == KernelVerdict::Reduced) {
        write_instance(out, res.instance);
      } else {
        out << "c trivial yes\n";
        if (res.certificate) write_sequence(out, *res.certificate);
      }
      std::ofstream rf;
      std::ostream& rep = ker_report.empty() ? std::cerr : (rf.open(ker_report), rf);
      rep << res.report.dump() << "\n";
      return 0;
    }
    if (*solve) {
      Instance inst = load(solve_in);
      SolveOutcome out = solve_bfs(inst, limits);
      std::cout << "verdict " << to_string(out.verdict) << "\n";
      std::cout << "states " << out.states_explored << "\n";
      if (out.verdict == SolveVerdict::Yes) {
        std::cout << "length " << out.length() << "\n";
        write_sequence(std::cout, out.sequence);
      }
      return out.verdict == SolveVerdict::ResourceLimit ? 3 : 0;
    }
    if (*verify) {
      Instance inst = load(verify_in);
      std::ifstream sf(verify_seq);
      if (!sf) throw std::runtime_error("cannot open " + verify_seq);
      VerifyReport r = verify_sequence(inst, parse_sequence(sf));
      if (r.ok) {
        std::cout << "ok\n";
        return 0;
      }
      std::cout << "fail step " << r.failing_step << ": " << r.message << "\n";
      return 1;
    }
    if (*trial) {
      std::ifstream mf(manifest);
      if (!mf) throw std::runtime_error("cannot open " + manifest);
      auto entries = parse_manifest(mf);
      auto reports = run_manifest(entries, threads, limits);
      std::ofstream f;
      std::ostream& out = open_out(trial_out, f);
      int agree = 0, disagree = 0, inconclusive = 0;
      for (const auto& r : reports) {
        out << r.to_json().dump() << "\n";
        if (r.inconclusive && r.error.empty())
          ++inconclusive;
        else if (r.agreement)
          ++agree;
        else
          ++disagree;
      }
      std::cerr << "trials " << reports.size() << " agree " << agree << " disagree " << disagree
                << " inconclusive " << inconclusive << "\n";
      return disagree == 0 ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
