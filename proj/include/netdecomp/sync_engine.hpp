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

#ifndef NETDECOMP_SYNC_ENGINE_HPP_
#define NETDECOMP_SYNC_ENGINE_HPP_

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "netdecomp/graph.hpp"

namespace netdecomp {

enum class CommModel { kLocal, kCongest };

/**
 * Round and message accounting for one run.
 *
 * In CONGEST mode messages above `budget_bits` are still delivered; each
 * (round, edge) pair that carried such a message counts as one violation.
 * LOCAL mode has no budget and therefore never records violations.
 */
struct RoundLedger {
  CommModel model = CommModel::kLocal;
  std::uint64_t budget_bits = 0;
  std::uint64_t rounds = 0;
  std::uint64_t max_message_bits = 0;
  std::uint64_t violations = 0;

  static RoundLedger local() { return {}; }
  static RoundLedger congest(std::uint64_t budget_bits);
  /// CONGEST with the default budget of 32 * ceil(log2 n) bits.
  static RoundLedger congest_for(std::size_t n);

  bool congest() const { return model == CommModel::kCongest; }
  void add_rounds(std::uint64_t r) { rounds += r; }
  void observe_message_bits(std::uint64_t bits) { max_message_bits = std::max(max_message_bits, bits); }

  /// Adds a sub-run's counters; each of its rounds costs `round_scale` rounds
  /// here (simulating a virtual graph whose edges are paths in the host).
  void absorb(const RoundLedger& sub, std::uint64_t round_scale = 1);

  friend bool operator==(const RoundLedger&, const RoundLedger&) = default;
};

/**
 * Charges one convergecast + broadcast over Steiner trees of depth
 * `steiner_radius`: 2r + 1 rounds in LOCAL. In CONGEST each edge may be
 * shared by `edge_tree_multiplicity` trees, so every round becomes a big-round
 * of that many rounds. Callers pass the maximum radius over all trees acting
 * in the same global step, not one call per tree.
 */
void charge_cluster_op(RoundLedger& ledger, std::uint64_t steiner_radius,
                       std::uint64_t edge_tree_multiplicity, std::uint64_t message_bits = 0);

/// What a node knows about itself before the first round.
struct NodeContext {
  Node node;
  NodeIdent id;
  std::span<const Node> neighbors;
  std::size_t node_count;
  int id_bits;
};

/// A message with its peer: the destination in an outbox, the sender in an inbox.
template <class Message>
struct Envelope {
  Node peer;
  Message payload;
};

// clang-format off
template <class P>
concept NodeProgram = requires(const P& program, typename P::State& state, const NodeContext& ctx,
                               std::span<const Envelope<typename P::Message>> inbox,
                               std::vector<Envelope<typename P::Message>>& outbox,
                               const typename P::Message& message) {
  { program.init(ctx) } -> std::same_as<typename P::State>;
  program.send(state, ctx, outbox);
  program.receive(state, ctx, inbox);
  { program.halted(std::as_const(state)) } -> std::convertible_to<bool>;
  { program.message_bits(message) } -> std::convertible_to<std::uint64_t>;
};
// clang-format on

template <class State>
struct SyncResult {
  std::vector<State> states;
  RoundLedger ledger;
  bool all_halted = false;
};

/**
 * Runs `program` on every node of `g` in synchronous rounds until every node
 * has halted or `max_rounds` rounds have executed.
 *
 * A round is: every non-halted node emits its outbox, then every node that
 * was non-halted at the start of the round consumes its inbox. Inboxes are
 * ordered by sender index. Messages to halted nodes are dropped. Sending to a
 * non-neighbor is a program bug and throws std::logic_error.
 */
template <NodeProgram P>
SyncResult<typename P::State> run_sync(const Graph& g, const P& program, RoundLedger ledger,
                                       std::uint64_t max_rounds) {
  using Message = typename P::Message;
  if (max_rounds < 1) throw std::invalid_argument("run_sync: max_rounds must be >= 1");
  const std::size_t n = g.node_count();

  auto context = [&](Node v) {
    return NodeContext{v, g.id(v), g.neighbors(v), n, g.id_bits()};
  };

  SyncResult<typename P::State> result;
  result.states.reserve(n);
  for (Node v = 0; v < n; ++v) result.states.push_back(program.init(context(v)));

  std::vector<std::vector<Envelope<Message>>> inbox(n);
  std::vector<Envelope<Message>> outbox;
  std::vector<char> active(n);
  std::vector<std::pair<Node, Node>> oversized;
  std::uint64_t executed = 0;

  while (executed < max_rounds) {
    bool any = false;
    for (Node v = 0; v < n; ++v) {
      active[v] = !program.halted(std::as_const(result.states[v]));
      any = any || active[v];
    }
    if (!any) break;

    for (auto& box : inbox) box.clear();
    oversized.clear();
    for (Node v = 0; v < n; ++v) {
      if (!active[v]) continue;
      outbox.clear();
      const NodeContext ctx = context(v);
      program.send(result.states[v], ctx, outbox);
      for (auto& env : outbox) {
        if (!g.has_edge(v, env.peer)) {
          throw std::logic_error("node " + std::to_string(v) + " sent to non-neighbor " +
                                 std::to_string(env.peer));
        }
        std::uint64_t bits = program.message_bits(env.payload);
        ledger.observe_message_bits(bits);
        if (ledger.congest() && bits > ledger.budget_bits) {
          oversized.emplace_back(std::min(v, env.peer), std::max(v, env.peer));
        }
        if (active[env.peer]) inbox[env.peer].push_back({v, std::move(env.payload)});
      }
    }
    std::sort(oversized.begin(), oversized.end());
    ledger.violations += static_cast<std::uint64_t>(
        std::unique(oversized.begin(), oversized.end()) - oversized.begin());

    for (Node v = 0; v < n; ++v) {
      if (!active[v]) continue;
      const NodeContext ctx = context(v);
      program.receive(result.states[v], ctx, std::span<const Envelope<Message>>(inbox[v]));
    }
    ++executed;
    ledger.add_rounds(1);
  }

  result.all_halted = true;
  for (Node v = 0; v < n; ++v) {
    result.all_halted = result.all_halted && program.halted(std::as_const(result.states[v]));
  }
  result.ledger = ledger;
  return result;
}

}  // namespace netdecomp

#endif  // NETDECOMP_SYNC_ENGINE_HPP_
