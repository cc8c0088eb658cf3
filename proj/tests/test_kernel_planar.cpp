#include <gtest/gtest.h>

#include <fstream>
#include <tuple>

#include "support.hpp"
#include "tjkernel/harness.hpp"
#include "tjkernel/kernel_planar.hpp"
#include "tjkernel/solver.hpp"

using namespace tjk;
using namespace tjk::testing;

namespace {

struct Fans {
  Instance inst;
  std::vector<std::vector<Vertex>> members;  // aligned with the requested fans
};

// Keys 0..keys-1; each fan (x, y, m) adds m fresh vertices joined to x and y.
Fans fans(int keys, const std::vector<Vertex>& src, const std::vector<Vertex>& tgt,
          const std::vector<std::tuple<Vertex, Vertex, int>>& spec) {
  int n = keys;
  for (const auto& f : spec) n += std::get<2>(f);
  Graph g(n);
  Fans out;
  Vertex next = keys;
  for (auto [x, y, m] : spec) {
    std::vector<Vertex> mem;
    for (int i = 0; i < m; ++i, ++next) {
      g.add_edge(x, next);
      g.add_edge(y, next);
      mem.push_back(next);
    }
    out.members.push_back(mem);
  }
  out.inst = make_instance(g, src, tgt, GraphClass::k3r(3));
  return out;
}

PlanarOptions strict_options() {
  PlanarOptions opts;
  opts.strict = true;
  return opts;
}

Instance gadget(const std::string& layout, std::uint64_t seed, int noise = 0) {
  GadgetParams p;
  p.layout = layout;
  p.noise = noise;
  p.seed = seed;
  return gen_two_class_gadget(p);
}

}  // namespace

TEST(Important, Examples) {
  auto seven = fans(4, {0, 1}, {2, 3}, {{0, 1, 7}});
  auto dec = compute_projection(seven.inst);
  EXPECT_EQ(important_vertices(dec, seven.inst.source), (std::vector<Vertex>{0, 1}));

  auto tf = fans(6, {0, 1, 2}, {3, 4, 5}, {{0, 1, 5}, {0, 2, 5}});
  EXPECT_EQ(important_vertices(compute_projection(tf.inst), tf.inst.source), (std::vector<Vertex>{0}));

  auto six = fans(4, {0, 1}, {2, 3}, {{0, 1, 6}});
  EXPECT_TRUE(important_vertices(compute_projection(six.inst), six.inst.source).empty());
  // Not locked for the target side.
  EXPECT_TRUE(important_vertices(dec, seven.inst.target).empty());
}

TEST(ColorRemoval, TriangleDropsOneBlue) {
  auto f = fans(6, {0, 1, 2}, {3, 4, 5}, {{0, 1, 7}, {0, 2, 7}, {1, 2, 7}});
  auto dec = compute_projection(f.inst);
  auto imp = important_vertices(dec, f.inst.source);
  ASSERT_EQ(imp, (std::vector<Vertex>{0, 1, 2}));
  auto col = color_removal(dec, f.inst.source, imp);
  EXPECT_EQ(col.of(0, 1), ClassColor::Uncolored);
  EXPECT_EQ(col.of(0, 2), ClassColor::Blue);
  EXPECT_EQ(col.of(1, 2), ClassColor::Blue);
  // Rerunning on the same data gives the same fixpoint.
  EXPECT_EQ(color_removal(dec, f.inst.source, imp).color, col.color);
}

TEST(ColorRemoval, SingleBlueStays) {
  auto f = fans(4, {0, 1}, {2, 3}, {{0, 1, 7}});
  auto dec = compute_projection(f.inst);
  auto col = color_removal(dec, f.inst.source, important_vertices(dec, f.inst.source));
  EXPECT_EQ(col.of(0, 1), ClassColor::Blue);
}

TEST(ColorRemoval, NothingImportantMeansUncolored) {
  auto f = fans(6, {0, 1, 2}, {3, 4, 5}, {{0, 1, 7}, {0, 2, 5}});
  auto dec = compute_projection(f.inst);
  auto col = color_removal(dec, f.inst.source, {});
  EXPECT_EQ(col.of(0, 1), ClassColor::Uncolored);
  EXPECT_EQ(col.of(0, 2), ClassColor::Uncolored);
}

TEST(ColorRemoval, RedPairKeepsItsKey) {
  auto f = fans(6, {0, 1, 2}, {3, 4, 5}, {{0, 1, 5}, {0, 2, 6}});
  auto dec = compute_projection(f.inst);
  auto imp = important_vertices(dec, f.inst.source);
  ASSERT_EQ(imp, (std::vector<Vertex>{0}));
  auto col = color_removal(dec, f.inst.source, imp);
  EXPECT_EQ(col.of(0, 1), ClassColor::Red);
  EXPECT_EQ(col.of(0, 2), ClassColor::Red);
}

TEST(ColorRemoval, UncoveredImportantThrows) {
  auto f = fans(4, {0, 1}, {2, 3}, {{0, 1, 4}});
  auto dec = compute_projection(f.inst);
  EXPECT_THROW(color_removal(dec, f.inst.source, {0}), std::logic_error);
}

TEST(Rules, Arithmetic) {
  // {0,1}: 7 members, uncoloured by removal, both keys important, 3 in I.
  // {0,2}: 10 members, Blue, 2 in I.  {1,2}: 7, Blue.  {3,4}: 4, not locked.
  auto f = fans(6, {0, 1, 2}, {3, 4, 5}, {{0, 1, 7}, {0, 2, 10}, {1, 2, 7}, {3, 4, 4}});
  auto dec = compute_projection(f.inst);
  auto imp = important_vertices(dec, f.inst.source);
  auto col = color_removal(dec, f.inst.source, imp);
  ASSERT_EQ(col.of(0, 1), ClassColor::Uncolored);
  ASSERT_EQ(col.of(0, 2), ClassColor::Blue);
  std::vector<Vertex> I{f.members[0][0], f.members[0][1], f.members[0][2], f.members[1][0], f.members[1][1]};
  auto out = apply_reduction_rules(f.inst, dec, I, col);
  EXPECT_EQ(out.rule1_deleted, 4);
  EXPECT_EQ(out.rule2_deleted, 1);
  EXPECT_EQ(out.rule3_deleted, 0);
  EXPECT_EQ(out.instance.n(), f.inst.n() - 5);
  auto after = compute_projection(out.instance);
  ASSERT_NE(after.find({0, 1}), nullptr);
  EXPECT_EQ(after.find({0, 1})->size(), 3u);
  EXPECT_EQ(after.find({0, 2})->size(), 9u);
  EXPECT_EQ(after.find({3, 4})->size(), 4u);
}

TEST(Volume, Examples) {
  // k = 2; class {0,2} has key 2 outside the source.
  auto enough = fans(4, {0, 1}, {2, 3}, {{0, 2, 6}});
  EXPECT_TRUE(sufficient_greedy_by_volume(compute_projection(enough.inst), enough.inst.source, 2));
  auto short_by_one = fans(4, {0, 1}, {2, 3}, {{0, 2, 5}});
  EXPECT_FALSE(sufficient_greedy_by_volume(compute_projection(short_by_one.inst), short_by_one.inst.source, 2));
  auto locked_only = fans(4, {0, 1}, {2, 3}, {{0, 1, 20}});
  EXPECT_FALSE(sufficient_greedy_by_volume(compute_projection(locked_only.inst), locked_only.inst.source, 2));
}

TEST(FreeVertices, Examples) {
  EXPECT_EQ(free_vertex_count(cycle_graph(5), {0, 2}), 0);
  EXPECT_EQ(free_vertex_count(path_graph(6), {0}), 4);
  EXPECT_EQ(free_vertex_count(Graph(3), {}), 3);
}

TEST(PlanarKernel, NeedsEmbedding) {
  Instance inst = make_instance(cycle_graph(5), {0, 2}, {1, 3}, GraphClass::planar());
  EXPECT_THROW(build_kernel_planar(inst), std::invalid_argument);
}

TEST(PlanarKernel, BelowThresholdUnchanged) {
  Instance inst = make_instance(cycle_graph(5), {0, 2}, {1, 3}, GraphClass::planar(), cycle_rotation(5));
  auto res = build_kernel_planar(inst, strict_options());
  EXPECT_EQ(res.verdict, KernelVerdict::Reduced);
  EXPECT_EQ(res.report.at("step"), "below-28k");
  EXPECT_EQ(res.instance.n(), 5);
}

TEST(PlanarKernel, BlueRuleShrinksAndAgrees) {
  int seen = 0;
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    Instance inst = gadget("S0-S1:58", seed, 1);
    auto res = build_kernel_planar(inst, strict_options());
    if (res.report.at("step") != "rules") continue;
    ++seen;
    EXPECT_GT(res.report.at("rule2_deleted").get<int>(), 0);
    EXPECT_LT(res.instance.n(), inst.n());
    EXPECT_LE(res.instance.n(), (38 + res.report.at("c").get<int>()) * inst.k);
    EXPECT_EQ(solve_bfs(inst).verdict, solve_bfs(res.instance).verdict);
  }
  EXPECT_GT(seen, 0);
}

TEST(PlanarKernel, RedRuleFires) {
  int fired = 0;
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    Instance inst = gadget("S0-S1:72,S1-S2:6,S0-S2:6", seed);
    auto res = build_kernel_planar(inst, strict_options());
    if (res.report.at("step") != "rules") continue;
    if (res.report.at("rule3_deleted").get<int>() > 0) ++fired;
    EXPECT_EQ(solve_bfs(inst).verdict, solve_bfs(res.instance).verdict);
  }
  EXPECT_GT(fired, 0);
}

TEST(PlanarKernel, ExternalFourColoringMeetsFortyTwoK) {
  std::ifstream in(std::string(TJK_DATA_DIR) + "/planar.manifest");
  ASSERT_TRUE(in);
  int reduced = 0;
  for (const auto& e : parse_manifest(in)) {
    if (e.generator != "gadget") continue;
    Instance inst = generate(e);
    ColoringResult four;
    ASSERT_TRUE(exact_coloring(inst.graph, 4, four)) << e.id;
    ASSERT_TRUE(is_proper_coloring(inst.graph, four.color_of));
    PlanarOptions opts;
    opts.strict = true;
    opts.coloring = &four;
    auto res = build_kernel_planar(inst, opts);
    if (res.verdict != KernelVerdict::Reduced) continue;
    ++reduced;
    EXPECT_LE(res.instance.n(), 42 * inst.k) << e.id;
  }
  EXPECT_GT(reduced, 50);
}

TEST(PlanarKernel, CleanBothIsYes) {
  std::ifstream in(std::string(TJK_DATA_DIR) + "/clean.manifest");
  ASSERT_TRUE(in);
  int checked = 0;
  SolveLimits limits;
  limits.max_states = 2'000'000;
  for (const auto& e : parse_manifest(in)) {
    if (checked == 30) break;
    Instance inst = generate(e);
    auto res = build_kernel_planar(inst);
    if (res.report.at("step") != "clean-both") continue;
    ++checked;
    EXPECT_EQ(res.verdict, KernelVerdict::TrivialYes);
    auto truth = solve_bfs(inst, limits).verdict;
    if (truth != SolveVerdict::ResourceLimit) {
      EXPECT_EQ(truth, SolveVerdict::Yes) << e.id;
    }
  }
  EXPECT_GT(checked, 0);
}
