#include <gtest/gtest.h>

#include <sstream>

#include "support.hpp"
#include "tjkernel/embedding.hpp"
#include "tjkernel/harness.hpp"
#include "tjkernel/minor.hpp"
#include "tjkernel/projection.hpp"

using namespace tjk;
using namespace tjk::testing;

namespace {

std::string dump(const Instance& inst) {
  std::ostringstream out;
  write_instance(out, inst);
  return out.str();
}

}  // namespace

TEST(Rng, BelowStaysInRange) {
  Rng rng(42);
  std::vector<int> hist(7, 0);
  for (int i = 0; i < 7000; ++i) ++hist[rng.below(7)];
  for (int h : hist) EXPECT_GT(h, 800);
  Rng a(9), b(9);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(a.next(), b.next());
}

TEST(GenPlanar, Deterministic) {
  EXPECT_EQ(dump(gen_planar_instance({20, 3, 0.5, 77})), dump(gen_planar_instance({20, 3, 0.5, 77})));
  EXPECT_NE(dump(gen_planar_instance({20, 3, 0.5, 77})), dump(gen_planar_instance({20, 3, 0.5, 78})));
}

TEST(GenPlanar, FourVerticesIsK4) {
  Instance inst = gen_planar_instance({4, 1, 1.0, 3});
  EXPECT_EQ(inst.graph.edge_count(), 6u);
  ASSERT_TRUE(inst.embedding);
  auto rep = validate_rotation_system(inst.graph, *inst.embedding);
  EXPECT_TRUE(rep.accepted);
  EXPECT_EQ(rep.faces, 4);
}

TEST(GenPlanar, ValidInstances) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    Instance inst = gen_planar_instance({24, 3, 0.7, seed});
    EXPECT_EQ(inst.n(), 24);
    EXPECT_EQ(inst.k, 3);
    EXPECT_TRUE(is_independent(inst.graph, inst.source));
    EXPECT_TRUE(is_independent(inst.graph, inst.target));
    ASSERT_TRUE(inst.embedding);
    EXPECT_TRUE(validate_rotation_system(inst.graph, *inst.embedding).accepted);
    // The kept BFS tree keeps the graph connected.
    EXPECT_GE(inst.graph.edge_count(), 23u);
  }
}

TEST(GenGadget, DeterministicAndEmbedded) {
  GadgetParams p;
  p.layout = "S0-S1:6,S0-T0:5";
  p.wiring = Wiring::Path;
  p.noise = 2;
  p.seed = 5;
  EXPECT_EQ(dump(gen_two_class_gadget(p)), dump(gen_two_class_gadget(p)));
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    p.seed = seed;
    Instance inst = gen_two_class_gadget(p);
    ASSERT_TRUE(inst.embedding);
    EXPECT_TRUE(validate_rotation_system(inst.graph, *inst.embedding).accepted);
    EXPECT_EQ(inst.source.size(), inst.target.size());
    auto dec = compute_projection(inst);
    EXPECT_GE(dec.n2, 2);
  }
}

TEST(GenGadget, SmallGadgetsAvoidK33Minor) {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    GadgetParams p;
    p.planar = false;
    p.class_sizes = {2 + static_cast<int>(seed % 4)};
    p.wiring = seed % 2 ? Wiring::Path : Wiring::Independent;
    p.seed = seed;
    Instance inst = gen_two_class_gadget(p);
    EXPECT_FALSE(inst.embedding);
    if (inst.n() > 12) continue;
    EXPECT_FALSE(check_k3r_minor_small(inst.graph, 3));
    ++checked;
  }
  EXPECT_GT(checked, 10);
}

TEST(GenGadget, ImpossibleRequestThrows) {
  // Fans on all six pairs of four keys, each closed into a cycle, cannot be drawn in the plane.
  GadgetParams p;
  p.layout = "S0-S1:4,S0-S2:4,S1-S2:4,S0-T0:4,S1-T0:4,S2-T0:4";
  p.wiring = Wiring::Cycle;
  EXPECT_THROW(gen_two_class_gadget(p), GenerationError);
}

TEST(Manifest, ParsesEntries) {
  std::istringstream in(
      "# comment\n"
      "a1 gen=planar mode=planar strict=1 n=16 k=3 keep=0.5 seed=9\n"
      "\n"
      "b2 gen=gadget declare=k3r r=4 layout=S0-S1:8 freeze=0.5 seed=3  # trailing\n");
  auto es = parse_manifest(in);
  ASSERT_EQ(es.size(), 2u);
  EXPECT_EQ(es[0].id, "a1");
  EXPECT_EQ(es[0].mode, KernelMode::Planar);
  EXPECT_TRUE(es[0].strict);
  EXPECT_EQ(es[0].planar.n, 16);
  EXPECT_EQ(es[0].planar.k, 3);
  EXPECT_DOUBLE_EQ(es[0].planar.keep, 0.5);
  EXPECT_EQ(entry_seed(es[0]), 9u);
  EXPECT_EQ(es[1].mode, KernelMode::General);
  EXPECT_TRUE(es[1].declare_k3r);
  EXPECT_FALSE(es[1].gadget.planar);
  EXPECT_EQ(es[1].gadget.r, 4);
  EXPECT_EQ(es[1].gadget.layout, "S0-S1:8");
  EXPECT_DOUBLE_EQ(es[1].gadget.freeze, 0.5);
  EXPECT_EQ(generate(es[1]).graph_class, GraphClass::k3r(4));
}

TEST(Manifest, ErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) -> std::size_t {
    std::istringstream in(text);
    try {
      parse_manifest(in);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("ok gen=planar\nbad n12\n"), 2u);
  EXPECT_EQ(line_of("# x\n\nbad gen=planar mode=fast\n"), 3u);
  EXPECT_EQ(line_of("bad gen=magic\n"), 1u);
  EXPECT_EQ(line_of("bad gen=planar n=abc\n"), 1u);
  EXPECT_EQ(line_of("ok gen=planar\nbad gen=planar sise=5\n"), 2u);
}

TEST(Trial, FiveCycle) {
  Instance inst = make_instance(cycle_graph(5), {0, 2}, {1, 3}, GraphClass::planar(), cycle_rotation(5));
  for (KernelMode mode : {KernelMode::General, KernelMode::Planar}) {
    TrialOptions opts;
    opts.mode = mode;
    auto rep = equivalence_trial(inst, opts);
    EXPECT_TRUE(rep.agreement);
    EXPECT_FALSE(rep.inconclusive);
    EXPECT_EQ(rep.original_verdict, "yes");
    EXPECT_EQ(rep.kernel_n, 5);
    auto j = rep.to_json();
    EXPECT_EQ(j.at("agreement"), true);
    EXPECT_FALSE(j.contains("error"));
  }
}

TEST(Trial, KernelErrorIsRecorded) {
  // The planar pipeline refuses an instance without a rotation system.
  Instance inst = make_instance(cycle_graph(5), {0, 2}, {1, 3}, GraphClass::planar());
  TrialOptions opts;
  opts.mode = KernelMode::Planar;
  auto rep = equivalence_trial(inst, opts);
  EXPECT_FALSE(rep.agreement);
  EXPECT_FALSE(rep.error.empty());
}

TEST(Trial, ResourceLimitIsInconclusive) {
  Instance inst = gen_planar_instance({24, 4, 0.2, 11});
  TrialOptions opts;
  opts.limits.max_states = 3;
  auto rep = equivalence_trial(inst, opts);
  EXPECT_TRUE(rep.inconclusive);
  EXPECT_FALSE(rep.agreement);
}

TEST(RunManifest, OrderAndThreadsIndependent) {
  std::istringstream in(
      "x0 gen=planar n=12 k=2 seed=1\n"
      "x1 gen=planar n=14 k=3 seed=2\n"
      "x2 gen=gadget mode=planar layout=S0-S1:6 seed=3\n"
      "x3 gen=gadget mode=general declare=k3r layout=S0-S1:19 seed=4\n");
  auto es = parse_manifest(in);
  auto one = run_manifest(es, 1);
  auto four = run_manifest(es, 4);
  ASSERT_EQ(one.size(), 4u);
  for (std::size_t i = 0; i < es.size(); ++i) {
    EXPECT_EQ(one[i].id, es[i].id);
    EXPECT_EQ(four[i].id, es[i].id);
    EXPECT_EQ(one[i].kernel_n, four[i].kernel_n);
    EXPECT_TRUE(one[i].agreement) << one[i].error;
  }
}

TEST(Stats, Keys) {
  Instance inst = make_instance(cycle_graph(5), {0, 2}, {1, 3}, GraphClass::planar(), cycle_rotation(5));
  auto s = instance_stats(inst);
  EXPECT_EQ(s.at("n2"), 1);
  EXPECT_EQ(s.at("n3"), 0);
  EXPECT_EQ(s.at("n2_margin"), 3 * 4 - 1);
  EXPECT_EQ(s.at("embedding_ok"), true);
  EXPECT_EQ(s.at("faces"), 2);
}
