// Copyright 2026 The netdecomp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "netdecomp/decomp_weak.hpp"
#include "netdecomp/verifier.hpp"
#include "test_util.hpp"

namespace netdecomp {
namespace {

bool failed(const Report& r, const std::string& name) {
  for (const auto& c : r.checks) {
    if (c.name == name) return !c.pass;
  }
  ADD_FAILURE() << "no check named " << name;
  return false;
}

Cluster singleton(Node v, int color, NodeIdent label) {
  Cluster c;
  c.color = color;
  c.label = label;
  c.members = {v};
  c.tree.root = v;
  c.tree.terminals = {v};
  return c;
}

TEST(VerifyWeak, AdjacentSameColorClustersFail) {
  Graph g = gen_path(2);
  WeakDecomposition dec;
  dec.colors = 1;
  dec.color_of = {0, 0};
  dec.clusters = {singleton(0, 0, 0), singleton(1, 0, 1)};
  Report r = verify_weak(g, dec);
  EXPECT_FALSE(r.ok());
  EXPECT_TRUE(failed(r, "separation"));
  EXPECT_FALSE(failed(r, "totality"));
  EXPECT_FALSE(r.first_failure()->witness.is_null());
  dec.color_of = {0, 1};
  dec.colors = 2;
  dec.clusters[1].color = 1;
  EXPECT_TRUE(verify_weak(g, dec).ok());
}

TEST(VerifyWeak, SeparationRespectsK) {
  Graph g = gen_path(4);
  WeakDecomposition dec;
  dec.colors = 2;
  dec.k = 2;
  dec.color_of = {0, 1, 1, 0};
  Cluster middle = singleton(1, 1, 1);
  middle.members = {1, 2};
  middle.tree.terminals = {1, 2};
  middle.tree.parent = {{2, 1}};
  middle.tree.radius = 1;
  dec.clusters = {singleton(0, 0, 0), singleton(3, 0, 3), middle};
  WeakBounds b;
  b.k = 2;
  EXPECT_TRUE(verify_weak(g, dec, b).ok());  // distance 3 >= k + 1
  b.k = 3;
  EXPECT_TRUE(failed(verify_weak(g, dec, b), "separation"));
  dec.color_of[2] = -1;
  EXPECT_TRUE(failed(verify_weak(g, dec, b), "totality"));
}

TEST(VerifyWeak, OversizedClusterFailsRadiusAndDiameter) {
  Graph g = gen_path(8);
  WeakDecomposition dec;
  dec.colors = 1;
  dec.color_of.assign(8, 0);
  Cluster c;
  c.members = {0, 1, 2, 3, 4, 5, 6, 7};
  c.tree.root = 0;
  c.tree.terminals = c.members;
  for (Node v = 1; v < 8; ++v) c.tree.parent.emplace_back(v, v - 1);
  c.tree.radius = 7;
  dec.clusters = {c};
  EXPECT_TRUE(verify_weak(g, dec).ok());
  WeakBounds b;
  b.radius = 3;
  Report r = verify_weak(g, dec, b);
  EXPECT_TRUE(failed(r, "tree_radius"));
  EXPECT_TRUE(failed(r, "weak_diameter"));
}

TEST(VerifyWeak, BrokenTreeFails) {
  Graph g = gen_path(3);
  WeakDecomposition dec;
  dec.colors = 1;
  dec.color_of = {0, 0, 0};
  Cluster c;
  c.members = {0, 1, 2};
  c.tree.root = 0;
  c.tree.terminals = c.members;
  c.tree.parent = {{1, 0}, {2, 0}};  // 2-0 is not an edge
  dec.clusters = {c};
  EXPECT_TRUE(failed(verify_weak(g, dec), "steiner_trees"));
}

TEST(VerifyWeak, ColorAndCongestionBounds) {
  Graph g = gen_path(3);
  WeakDecomposition dec;
  dec.colors = 2;
  dec.color_of = {0, 1, 0};
  dec.clusters = {singleton(0, 0, 0), singleton(1, 1, 1), singleton(2, 0, 2)};
  WeakBounds b;
  b.colors = 1;
  EXPECT_TRUE(failed(verify_weak(g, dec, b), "color_count"));
  b.colors = 2;
  b.congestion = 0;
  EXPECT_FALSE(failed(verify_weak(g, dec, b), "congestion"));  // singletons use no edges
}

TEST(VerifyStrong, Cases) {
  Graph g = gen_path(8);
  std::vector<int> one(8, 0);
  EXPECT_TRUE(failed(verify_strong(g, one, 6, 3), "component_diameter"));
  EXPECT_TRUE(verify_strong(g, one, 7, 1).ok());
  std::vector<int> alt{0, 1, 0, 1, 0, 1, 0, 1};
  EXPECT_TRUE(verify_strong(g, alt, 0, 2).ok());
  EXPECT_TRUE(failed(verify_strong(g, alt, 0, 1), "color_count"));
  std::vector<int> missing{0, -1, 0, 1, 0, 1, 0, 1};
  EXPECT_TRUE(failed(verify_strong(g, missing, 0, 2), "totality"));
}

TEST(VerifyMis, Cases) {
  Graph g = gen_path(4);
  EXPECT_TRUE(verify_mis(g, std::vector<Node>{0, 2}).ok());
  EXPECT_TRUE(failed(verify_mis(g, std::vector<Node>{0, 1}), "independent"));
  EXPECT_TRUE(failed(verify_mis(g, std::vector<Node>{0}), "maximal"));
  EXPECT_TRUE(failed(verify_mis(g, std::vector<Node>{9}), "in_range"));
}

TEST(VerifyColoring, Cases) {
  Graph g = gen_path(3);
  std::vector<std::int64_t> good{0, 1, 0};
  std::vector<std::int64_t> bad{0, 0, 1};
  EXPECT_TRUE(verify_coloring(g, good).ok());
  EXPECT_TRUE(failed(verify_coloring(g, bad), "proper"));
  std::vector<std::vector<std::int64_t>> lists{{0}, {2}, {0}};
  EXPECT_TRUE(failed(verify_coloring(g, good, &lists), "in_list"));
}

TEST(VerifyRuling, Cases) {
  Graph g = gen_path(5);
  auto all = testing::all_nodes(g);
  EXPECT_TRUE(verify_ruling(g, std::vector<Node>{0, 4}, all, 2).ok());
  EXPECT_TRUE(failed(verify_ruling(g, std::vector<Node>{0, 4}, all, 1), "domination"));
  EXPECT_TRUE(failed(verify_ruling(g, std::vector<Node>{0, 1}, all, 3), "non_adjacent"));
  std::vector<Node> part{0, 1};
  EXPECT_TRUE(failed(verify_ruling(g, std::vector<Node>{3}, part, 3), "subset"));
}

TEST(PhaseInvariants, HoldAndCatchShrinkage) {
  Graph g = shuffle_ids(gen_random(80, 0.05, 2), 5);
  int calls = 0;
  weak_decomposition(g, RoundLedger::local(), [&](const PhaseSnapshot& snap) {
    ++calls;
    EXPECT_TRUE(check_phase_invariants(snap).ok());
    PhaseSnapshot worse = snap;
    worse.stats.alive_before = 10 * snap.stats.alive_after + 10;
    EXPECT_TRUE(failed(check_phase_invariants(worse), "survivors"));
  });
  EXPECT_GT(calls, 0);
}

TEST(Report, JsonShape) {
  Report r;
  r.add("a", true);
  r.add("b", false, nlohmann::json{{"node", 3}});
  auto j = r.to_json();
  EXPECT_FALSE(j.at("ok").get<bool>());
  EXPECT_EQ(j.at("checks").size(), 2U);
  EXPECT_EQ(r.first_failure()->name, "b");
}

}  // namespace
}  // namespace netdecomp
