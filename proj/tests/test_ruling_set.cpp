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

#include <random>

#include "netdecomp/ruling_set.hpp"
#include "netdecomp/verifier.hpp"
#include "test_util.hpp"

namespace netdecomp {
namespace {

using testing::all_nodes;

// Direct set-based pruning, written without the round engine.
std::vector<Node> pruning_oracle(const Graph& g, const std::vector<Node>& domain) {
  std::vector<char> cand(g.node_count(), 0);
  for (Node v : domain) cand[v] = 1;
  for (int bit = 0; bit < g.id_bits(); ++bit) {
    std::vector<char> next = cand;
    for (Node v = 0; v < g.node_count(); ++v) {
      if (!cand[v] || !((g.id(v) >> bit) & 1U)) continue;
      for (Node w : g.neighbors(v)) {
        if (cand[w] && !((g.id(w) >> bit) & 1U)) next[v] = 0;
      }
    }
    cand = next;
  }
  std::vector<Node> out;
  for (Node v = 0; v < g.node_count(); ++v) {
    if (cand[v]) out.push_back(v);
  }
  return out;
}

TEST(RulingSet, PathOfFourHandTrace) {
  Graph g = gen_path(4);
  auto r = ruling_set(g, all_nodes(g));
  EXPECT_EQ(r.members, (std::vector<Node>{0, 2}));
  EXPECT_EQ(r.ledger.rounds, 2U);
  EXPECT_EQ(r.parent[1], std::optional<Node>(0));
  EXPECT_EQ(r.parent[3], std::optional<Node>(2));
}

TEST(RulingSet, CompleteGraphOfFourHandTrace) {
  Graph g = gen_complete(4);
  auto r = ruling_set(g, all_nodes(g));
  EXPECT_EQ(r.members, (std::vector<Node>{0}));
  EXPECT_EQ(r.ledger.rounds, 2U);
  EXPECT_EQ(r.depth[2], 1);
}

TEST(RulingSet, SingleNodeAndEmpty) {
  Graph g = gen_path(1);
  EXPECT_EQ(ruling_set(g, all_nodes(g)).members, (std::vector<Node>{0}));
  EXPECT_THROW(ruling_set(g, std::vector<Node>{}), std::invalid_argument);
}

TEST(RulingSet, MatchesOracleAndVerifier) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = testing::random_small(rng, 60);
    std::vector<Node> domain;
    for (Node v = 0; v < g.node_count(); ++v) {
      if (rng() % 4 != 0) domain.push_back(v);
    }
    if (domain.empty()) domain.push_back(0);
    auto r = ruling_set(g, domain);
    EXPECT_EQ(r.members, pruning_oracle(g, domain));
    EXPECT_EQ(r.ledger.rounds, static_cast<std::uint64_t>(g.id_bits()));
    Report rep = verify_ruling(g, r.members, domain, g.id_bits());
    EXPECT_TRUE(rep.ok()) << testing::describe(rep);
    for (Node v : domain) EXPECT_LE(r.depth[v], g.id_bits());
  }
}

TEST(RulingSet, CongestMessagesFitLogBudget) {
  Graph g = shuffle_ids(gen_random(200, 0.05, 4), 2);
  auto r = ruling_set(g, all_nodes(g), RoundLedger::congest_for(g.node_count()));
  EXPECT_EQ(r.ledger.violations, 0U);
  EXPECT_LE(r.ledger.max_message_bits, static_cast<std::uint64_t>(g.id_bits()));
}

// After r rounds a node's state may depend only on its r-hop ball: rewiring
// and relabeling everything farther away must not change it.
TEST(RulingSet, LocalityAudit) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = shuffle_ids(gen_random(60, 0.06, rng()), rng());
    const Node v = static_cast<Node>(rng() % g.node_count());
    for (std::uint64_t rounds = 1; rounds <= 3; ++rounds) {
      DistanceMap dist = bfs_distances(g, std::span<const Node>(&v, 1));
      std::vector<std::pair<Node, Node>> edges;
      for (auto [a, b] : g.edges()) {
        const bool near = (dist[a] != kUnreachable && dist[a] < static_cast<Distance>(rounds)) ||
                          (dist[b] != kUnreachable && dist[b] < static_cast<Distance>(rounds));
        if (near) edges.emplace_back(a, b);
      }
      // Far region replaced by a fresh random graph.
      std::vector<Node> far;
      for (Node u = 0; u < g.node_count(); ++u) {
        if (dist[u] == kUnreachable || dist[u] > static_cast<Distance>(rounds)) far.push_back(u);
      }
      for (std::size_t i = 0; i + 1 < far.size(); ++i) {
        if (rng() % 3 == 0) edges.emplace_back(far[i], far[i + 1]);
      }
      std::vector<NodeIdent> ids = g.ids();
      std::vector<NodeIdent> far_ids;
      for (Node u : far) far_ids.push_back(ids[u]);
      std::shuffle(far_ids.begin(), far_ids.end(), rng);
      for (std::size_t i = 0; i < far.size(); ++i) ids[far[i]] = far_ids[i];
      Graph h = Graph::from_edge_list(g.node_count(), edges, ids);

      auto a = ruling_set_states_after(g, all_nodes(g), rounds);
      auto b = ruling_set_states_after(h, all_nodes(h), rounds);
      EXPECT_EQ(a[v].candidate, b[v].candidate) << "trial " << trial << " rounds " << rounds;
      EXPECT_EQ(a[v].parent, b[v].parent);
    }
  }
}

}  // namespace
}  // namespace netdecomp
