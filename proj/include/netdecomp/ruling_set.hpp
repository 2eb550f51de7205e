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

#ifndef NETDECOMP_RULING_SET_HPP_
#define NETDECOMP_RULING_SET_HPP_

#include <optional>
#include <span>
#include <vector>

#include "netdecomp/graph.hpp"
#include "netdecomp/sync_engine.hpp"

namespace netdecomp {

/**
 * Bit-by-bit pruning as a node program. In round i (0-based) a node still in
 * the candidate set whose identifier has bit i set leaves the set if some
 * neighbor that is still a candidate has bit i clear; it then points to the
 * smallest such neighbor identifier. Every node halts after `id_bits` rounds.
 *
 * Candidates announce themselves by sending their identifier; nodes outside
 * the restriction are halted from the start, so they neither send nor
 * receive.
 */
class RulingSetProgram {
 public:
  struct State {
    bool inside = false;
    bool candidate = false;
    int round = 0;
    int left_in_round = -1;
    std::optional<Node> parent;
    NodeIdent parent_id = 0;
  };
  using Message = NodeIdent;

  /// `bits` rounds are run, one per identifier bit.
  RulingSetProgram(std::span<const char> inside, int bits) : inside_(inside), bits_(bits) {}

  State init(const NodeContext& ctx) const;
  void send(State& state, const NodeContext& ctx, std::vector<Envelope<Message>>& outbox) const;
  void receive(State& state, const NodeContext& ctx, std::span<const Envelope<Message>> inbox) const;
  bool halted(const State& state) const { return !state.inside || state.round >= bits_; }
  std::uint64_t message_bits(const Message& m) const { return static_cast<std::uint64_t>(bit_length(m)); }

 private:
  std::span<const char> inside_;
  int bits_;
};

/// Members, domination forest, and depth per node.
struct RulingSetResult {
  std::vector<Node> members;                  // ascending
  std::vector<std::optional<Node>> parent;    // nullopt for members and outsiders
  std::vector<Distance> depth;                // kUnreachable outside the restriction
  RoundLedger ledger;
};

/// (2, b)-ruling set of G[restrict_to]; throws std::invalid_argument when the
/// restriction is empty. `ledger` supplies the communication model.
RulingSetResult ruling_set(const Graph& g, std::span<const Node> restrict_to,
                           RoundLedger ledger = RoundLedger::local());

/// Truncated run for locality audits: the program's states after `rounds`.
std::vector<RulingSetProgram::State> ruling_set_states_after(const Graph& g,
                                                             std::span<const Node> restrict_to,
                                                             std::uint64_t rounds);

}  // namespace netdecomp

#endif  // NETDECOMP_RULING_SET_HPP_
