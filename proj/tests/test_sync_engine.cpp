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

#include "netdecomp/sync_engine.hpp"
#include "test_util.hpp"

namespace netdecomp {
namespace {

// Node 0 floods a token; a node halts once it has forwarded the token.
struct Flood {
  struct State {
    bool has = false;
    bool sent = false;
    int reached_round = -1;
    int round = 0;
  };
  using Message = int;

  State init(const NodeContext& ctx) const {
    State s;
    s.has = ctx.node == 0;
    if (s.has) s.reached_round = 0;
    return s;
  }
  void send(State& s, const NodeContext& ctx, std::vector<Envelope<Message>>& out) const {
    if (s.has && !s.sent) {
      for (Node w : ctx.neighbors) out.push_back({w, 1});
      s.sent = true;
    }
  }
  void receive(State& s, const NodeContext&, std::span<const Envelope<Message>> in) const {
    ++s.round;
    if (!s.has && !in.empty()) {
      s.has = true;
      s.reached_round = s.round;
    }
  }
  bool halted(const State& s) const { return s.has && s.sent; }
  std::uint64_t message_bits(const Message&) const { return 1; }
};

// Every node sends one oversized message to each neighbor, once.
struct Shout {
  struct State {
    bool done = false;
  };
  using Message = std::uint64_t;
  std::uint64_t bits;

  State init(const NodeContext&) const { return {}; }
  void send(State&, const NodeContext& ctx, std::vector<Envelope<Message>>& out) const {
    for (Node w : ctx.neighbors) out.push_back({w, 0});
  }
  void receive(State& s, const NodeContext&, std::span<const Envelope<Message>>) const { s.done = true; }
  bool halted(const State& s) const { return s.done; }
  std::uint64_t message_bits(const Message&) const { return bits; }
};

struct Stray {
  struct State {};
  using Message = int;
  State init(const NodeContext&) const { return {}; }
  void send(State&, const NodeContext& ctx, std::vector<Envelope<Message>>& out) const {
    if (ctx.node == 0) out.push_back({3, 0});
  }
  void receive(State&, const NodeContext&, std::span<const Envelope<Message>>) const {}
  bool halted(const State&) const { return false; }
  std::uint64_t message_bits(const Message&) const { return 1; }
};

TEST(SyncEngine, FloodOnPathReachesInDistanceRounds) {
  Graph g = gen_path(4);
  auto run = run_sync(g, Flood{}, RoundLedger::local(), 100);
  EXPECT_TRUE(run.all_halted);
  for (Node v = 0; v < 4; ++v) EXPECT_EQ(run.states[v].reached_round, static_cast<int>(v));
  // Node 3 is reached in round 3 and forwards in round 4.
  EXPECT_EQ(run.ledger.rounds, 4U);
  EXPECT_EQ(run.ledger.violations, 0U);
}

TEST(SyncEngine, MaxRoundsTruncates) {
  Graph g = gen_path(10);
  auto run = run_sync(g, Flood{}, RoundLedger::local(), 3);
  EXPECT_FALSE(run.all_halted);
  EXPECT_EQ(run.ledger.rounds, 3U);
  EXPECT_EQ(run.states[3].reached_round, 3);
  EXPECT_EQ(run.states[4].reached_round, -1);
  EXPECT_THROW(run_sync(g, Flood{}, RoundLedger::local(), 0), std::invalid_argument);
}

TEST(SyncEngine, CongestViolationsCountedPerEdgePerRound) {
  Graph g = gen_path(3);
  auto run = run_sync(g, Shout{100}, RoundLedger::congest(10), 5);
  EXPECT_EQ(run.ledger.rounds, 1U);
  EXPECT_EQ(run.ledger.violations, 2U);
  EXPECT_EQ(run.ledger.max_message_bits, 100U);
  auto ok = run_sync(g, Shout{10}, RoundLedger::congest(10), 5);
  EXPECT_EQ(ok.ledger.violations, 0U);
  auto local = run_sync(g, Shout{100}, RoundLedger::local(), 5);
  EXPECT_EQ(local.ledger.violations, 0U);
}

TEST(SyncEngine, SendingToNonNeighborThrows) {
  EXPECT_THROW(run_sync(gen_path(4), Stray{}, RoundLedger::local(), 2), std::logic_error);
}

TEST(RoundLedger, ClusterOpCharges) {
  RoundLedger local = RoundLedger::local();
  charge_cluster_op(local, 5, 7, 1000);
  EXPECT_EQ(local.rounds, 11U);
  EXPECT_EQ(local.violations, 0U);
  RoundLedger congest = RoundLedger::congest(64);
  charge_cluster_op(congest, 5, 3, 10);
  EXPECT_EQ(congest.rounds, 33U);
  charge_cluster_op(congest, 0, 0, 100);
  EXPECT_EQ(congest.rounds, 34U);
  EXPECT_EQ(congest.violations, 1U);
  EXPECT_THROW(RoundLedger::congest(0), std::invalid_argument);
  EXPECT_EQ(RoundLedger::congest_for(1024).budget_bits, 320U);
  EXPECT_EQ(RoundLedger::congest_for(1).budget_bits, 32U);
}

TEST(RoundLedger, AbsorbScalesRounds) {
  RoundLedger host = RoundLedger::local();
  RoundLedger sub = RoundLedger::local();
  sub.rounds = 4;
  sub.max_message_bits = 9;
  host.absorb(sub, 3);
  EXPECT_EQ(host.rounds, 12U);
  EXPECT_EQ(host.max_message_bits, 9U);
}

}  // namespace
}  // namespace netdecomp
