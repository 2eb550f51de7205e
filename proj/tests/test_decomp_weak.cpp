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

#include <limits>
#include <random>

#include "netdecomp/decomp_weak.hpp"
#include "netdecomp/verifier.hpp"
#include "test_util.hpp"

namespace netdecomp {
namespace {

using testing::all_nodes;
using testing::make_graph;

// Exposes the engine state so tests can stage clusters by hand.
class Harness : public WeakClustering {
 public:
  Harness(const Graph& g, std::span<const Node> nodes, RoundLedger& ledger)
      : WeakClustering(g, nodes, ledger) {}

  // Moves `v` into the cluster of `root` below `parent`.
  void place(Node v, Node root, Node parent) { join(v, root, parent, 1); }
};

WeakBounds weak_bounds(const Graph& g) {
  const auto p = DecompositionParams::of(g);
  WeakBounds b;
  b.radius = static_cast<std::uint64_t>(p.id_bits) * p.steps_per_phase;
  b.colors = floor_log2(g.node_count()) + 1;
  b.congestion = static_cast<std::uint64_t>(p.id_bits);
  return b;
}

TEST(DecompositionParams, Values) {
  auto p = DecompositionParams::of(gen_path(1024));
  EXPECT_EQ(p.id_bits, 10);
  EXPECT_EQ(p.log_n, 10);
  EXPECT_EQ(p.steps_per_phase, 1000U);
  EXPECT_EQ(p.growth_step_bound(), 400U);
  EXPECT_EQ(DecompositionParams::of(gen_path(1)).steps_per_phase, 0U);
}

TEST(LabelBits, MostSignificantFirst) {
  EXPECT_EQ(label_bits(5, 4), "0101");
  EXPECT_EQ(label_bits(0, 1), "0");
}

TEST(RunStep, TwoAdjacentNodesMerge) {
  Graph g = gen_path(2);
  RoundLedger ledger = RoundLedger::local();
  WeakClustering engine(g, all_nodes(g), ledger);
  engine.begin_phase(0);
  ASSERT_TRUE(engine.run_step());
  EXPECT_EQ(engine.state().label[1], 0U);
  EXPECT_TRUE(engine.state().alive(1));
  EXPECT_EQ(engine.cluster_size(0), 2U);
  EXPECT_EQ(engine.forest().depth(0, 1), 1);
  EXPECT_FALSE(engine.run_step());
  EXPECT_EQ(ledger.rounds, 1U);  // one cluster op over radius-0 trees
}

TEST(RunStep, IsolatedRedNodeDoesNothing) {
  Graph g = make_graph(2, {});
  RoundLedger ledger = RoundLedger::local();
  WeakClustering engine(g, all_nodes(g), ledger);
  engine.begin_phase(0);
  EXPECT_FALSE(engine.run_step());
  EXPECT_TRUE(engine.state().alive(1));
  EXPECT_EQ(ledger.rounds, 0U);
}

// Path 0-1-2-3-4-5-7 plus isolated 6; ids 0..7 so b = 3 and the threshold is |A|/6.
TEST(RunStep, DenialAtThreshold) {
  Graph g = make_graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 7}});
  RoundLedger ledger = RoundLedger::local();
  Harness h(g, all_nodes(g), ledger);
  for (Node v = 1; v <= 5; ++v) h.place(v, 0, v - 1);
  h.begin_phase(0);
  ASSERT_EQ(h.cluster_size(0), 6U);
  ASSERT_TRUE(h.run_step());  // 1 proposal, 1 <= 6/6: denied
  EXPECT_EQ(h.state().status[7], NodeStatus::kDead);
  EXPECT_TRUE(h.stopped(0));
  EXPECT_FALSE(h.forest().contains(0, 7));
  EXPECT_FALSE(h.run_step());
}

TEST(RunStep, AcceptanceJustAboveThreshold) {
  Graph g = make_graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 7}});
  RoundLedger ledger = RoundLedger::local();
  Harness h(g, all_nodes(g), ledger);
  for (Node v = 1; v <= 4; ++v) h.place(v, 0, v - 1);
  h.begin_phase(0);
  ASSERT_EQ(h.cluster_size(0), 5U);
  ASSERT_TRUE(h.run_step());  // node 5 proposes: 1 > 5/6
  EXPECT_EQ(h.state().label[5], 0U);
  EXPECT_EQ(h.forest().depth(0, 5), 5);
  ASSERT_TRUE(h.run_step());  // node 7 proposes: 1 <= 6/6
  EXPECT_EQ(h.state().status[7], NodeStatus::kDead);
}

TEST(RunPhase, AllSameBitIsNoOp) {
  // ids 0, 2, 4, 6 all have bit 0 clear.
  Graph g = make_graph(4, {{0, 1}, {1, 2}, {2, 3}}, std::vector<NodeIdent>{0, 2, 4, 6});
  RoundLedger ledger = RoundLedger::local();
  WeakClustering engine(g, all_nodes(g), ledger);
  PhaseStats s = engine.run_phase(0);
  EXPECT_EQ(s.steps, 0U);
  EXPECT_EQ(s.deaths, 0U);
}

TEST(RunPhase, CompleteGraphPhaseZero) {
  Graph g = gen_complete(4);
  RoundLedger ledger = RoundLedger::local();
  WeakClustering engine(g, all_nodes(g), ledger);
  PhaseStats s = engine.run_phase(0);
  EXPECT_EQ(s.deaths, 0U);
  EXPECT_EQ(engine.state().label[1], 0U);
  EXPECT_EQ(engine.state().label[3], 0U);
  EXPECT_EQ(engine.state().label[2], 2U);
  EXPECT_EQ(engine.cluster_size(0), 3U);
}

TEST(RunPhase, PathWithIdsTwoThree) {
  Graph g = make_graph(2, {{0, 1}}, std::vector<NodeIdent>{2, 3});
  RoundLedger ledger = RoundLedger::local();
  OneColorResult r = cluster_one_color(g, all_nodes(g), ledger);
  ASSERT_EQ(r.clusters.size(), 1U);
  EXPECT_EQ(r.clusters[0].label, 2U);
  EXPECT_EQ(r.clusters[0].members, (std::vector<Node>{0, 1}));
}

TEST(ClusterOneColor, SingleNode) {
  Graph g = gen_path(1);
  RoundLedger ledger = RoundLedger::local();
  OneColorResult r = cluster_one_color(g, all_nodes(g), ledger);
  ASSERT_EQ(r.clusters.size(), 1U);
  EXPECT_EQ(r.clusters[0].tree.radius, 0);
  EXPECT_TRUE(r.dead.empty());
}

TEST(ClusterOneColor, CompleteGraphOfFour) {
  Graph g = gen_complete(4);
  RoundLedger ledger = RoundLedger::local();
  OneColorResult r = cluster_one_color(g, all_nodes(g), ledger);
  ASSERT_EQ(r.clusters.size(), 1U);
  EXPECT_EQ(r.clusters[0].members, (std::vector<Node>{0, 1, 2, 3}));
  EXPECT_EQ(r.clusters[0].label, 0U);
  EXPECT_TRUE(r.dead.empty());
  EXPECT_EQ(r.clusters[0].tree.terminals, r.clusters[0].members);
  // Node 2 joined in phase 1 through its smallest neighbor 0.
  EXPECT_EQ(r.clusters[0].tree.parent,
            (std::vector<std::pair<Node, Node>>{{1, 0}, {2, 0}, {3, 0}}));
}

TEST(ClusterOneColor, EmptySetRejected) {
  Graph g = gen_path(3);
  RoundLedger ledger = RoundLedger::local();
  EXPECT_THROW(cluster_one_color(g, std::vector<Node>{}, ledger), std::invalid_argument);
}

TEST(ClusterOneColor, NodesOutsideSetAreIgnored) {
  Graph g = gen_path(5);
  RoundLedger ledger = RoundLedger::local();
  std::vector<Node> s{0, 1, 3, 4};
  OneColorResult r = cluster_one_color(g, s, ledger);
  for (const auto& c : r.clusters) {
    for (const auto& [child, parent] : c.tree.parent) {
      EXPECT_NE(child, 2U);
      EXPECT_NE(parent, 2U);
    }
  }
  EXPECT_EQ(r.clustered.size() + r.dead.size(), 4U);
}

TEST(ClusterOneColor, PropertiesOnRandomGraphs) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 80; ++trial) {
    Graph g = testing::random_small(rng, 80);
    const auto params = DecompositionParams::of(g);
    const auto b = static_cast<std::uint64_t>(params.id_bits);
    std::vector<Node> s;
    for (Node v = 0; v < g.node_count(); ++v) {
      if (rng() % 5 != 0) s.push_back(v);
    }
    if (s.empty()) continue;
    RoundLedger ledger = RoundLedger::local();
    int phases_seen = 0;
    OneColorResult r = cluster_one_color(g, s, ledger, [&](const PhaseSnapshot& snap) {
      ++phases_seen;
      Report rep = check_phase_invariants(snap);
      EXPECT_TRUE(rep.ok()) << "trial " << trial << " phase " << snap.phase << " "
                            << testing::describe(rep);
    });
    EXPECT_EQ(phases_seen, params.id_bits);
    EXPECT_GE(2 * r.clustered.size(), s.size());
    EXPECT_EQ(r.clustered.size() + r.dead.size(), s.size());
    EXPECT_LE(r.max_edge_multiplicity, b);
    for (const auto& ph : r.phases) {
      EXPECT_LE(ph.deaths, (ph.alive_before + 2 * b - 1) / (2 * b));
      EXPECT_LE(ph.max_growth_steps, params.growth_step_bound());
      EXPECT_LE(ph.max_edge_additions, 1U);
    }
    // Clusters pairwise non-adjacent.
    std::vector<int> owner(g.node_count(), -1);
    for (std::size_t i = 0; i < r.clusters.size(); ++i) {
      for (Node v : r.clusters[i].members) owner[v] = static_cast<int>(i);
    }
    for (auto [u, v] : g.edges()) {
      if (owner[u] >= 0 && owner[v] >= 0) {
        EXPECT_EQ(owner[u], owner[v]);
      }
    }
  }
}

// A node that is blue at some step keeps its label until the phase ends.
TEST(RunPhase, BlueLabelsAreStable) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = testing::random_small(rng, 60);
    RoundLedger ledger = RoundLedger::local();
    WeakClustering engine(g, all_nodes(g), ledger);
    for (int phase = 0; phase < engine.params().id_bits; ++phase) {
      engine.begin_phase(phase);
      constexpr Node kUnset = std::numeric_limits<Node>::max();
      std::vector<Node> blue_label(g.node_count(), kUnset);
      auto snapshot_blue = [&] {
        for (Node v = 0; v < g.node_count(); ++v) {
          if (!engine.state().alive(v) || !engine.is_blue(v)) continue;
          if (blue_label[v] != kUnset) {
            EXPECT_EQ(blue_label[v], engine.state().label[v]);
          }
          blue_label[v] = engine.state().label[v];
        }
      };
      snapshot_blue();
      while (engine.run_step()) snapshot_blue();
    }
  }
}

TEST(WeakDecomposition, SingleNodeAndCompleteGraph) {
  EXPECT_EQ(weak_decomposition(gen_path(1)).colors, 1);
  EXPECT_EQ(weak_decomposition(gen_complete(4)).colors, 1);
}

TEST(WeakDecomposition, RandomGraphPassesVerifier) {
  Graph g = gen_random(256, 0.05, 3);
  WeakDecomposition dec = weak_decomposition(g);
  EXPECT_LE(dec.colors, 9);
  Report rep = verify_weak(g, dec, weak_bounds(g));
  EXPECT_TRUE(rep.ok()) << testing::describe(rep);
}

TEST(WeakDecomposition, ShuffledFamiliesPassVerifier) {
  std::vector<Graph> graphs{gen_path(100), gen_cycle(77), gen_torus(2, 9), gen_torus(3, 4),
                            gen_complete(20), gen_random(300, 0.01, 8)};
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    for (const Graph& base : graphs) {
      Graph g = shuffle_ids(base, seed);
      WeakDecomposition dec = weak_decomposition(g);
      Report rep = verify_weak(g, dec, weak_bounds(g));
      EXPECT_TRUE(rep.ok()) << testing::describe(rep);
      for (const auto& run : dec.runs) EXPECT_GE(2 * run.clustered, run.attempted);
    }
  }
}

TEST(WeakDecomposition, CongestLedgerStaysWithinBudget) {
  Graph g = shuffle_ids(gen_random(200, 0.03, 5), 7);
  WeakDecomposition local = weak_decomposition(g);
  WeakDecomposition congest = weak_decomposition(g, RoundLedger::congest_for(g.node_count()));
  EXPECT_EQ(local.clusters, congest.clusters);
  EXPECT_EQ(congest.ledger.violations, 0U);
  EXPECT_GE(congest.ledger.rounds, local.ledger.rounds);
}

TEST(WeakDecomposition, Deterministic) {
  Graph g = shuffle_ids(gen_random(150, 0.04, 9), 1);
  WeakDecomposition a = weak_decomposition(g);
  WeakDecomposition b = weak_decomposition(g);
  EXPECT_EQ(a.clusters, b.clusters);
  EXPECT_EQ(a.color_of, b.color_of);
  EXPECT_EQ(a.ledger, b.ledger);
}

}  // namespace
}  // namespace netdecomp
