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

#include "netdecomp/ruling_set.hpp"

#include <stdexcept>

namespace netdecomp {

RulingSetProgram::State RulingSetProgram::init(const NodeContext& ctx) const {
  State s;
  s.inside = inside_[ctx.node] != 0;
  s.candidate = s.inside;
  return s;
}

void RulingSetProgram::send(State& state, const NodeContext& ctx,
                            std::vector<Envelope<Message>>& outbox) const {
  if (!state.candidate) return;
  for (Node w : ctx.neighbors) outbox.push_back({w, ctx.id});
}

void RulingSetProgram::receive(State& state, const NodeContext& ctx,
                               std::span<const Envelope<Message>> inbox) const {
  const int bit = state.round++;
  if (!state.candidate || ((ctx.id >> bit) & 1U) == 0) return;
  std::optional<Envelope<Message>> best;
  for (const auto& env : inbox) {
    if ((env.payload >> bit) & 1U) continue;
    if (!best || env.payload < best->payload) best = env;
  }
  if (!best) return;
  state.candidate = false;
  state.left_in_round = bit;
  state.parent = best->peer;
  state.parent_id = best->payload;
}

namespace {

std::vector<char> mask_of(const Graph& g, std::span<const Node> nodes) {
  std::vector<char> inside(g.node_count(), 0);
  for (Node v : nodes) inside.at(v) = 1;
  return inside;
}

}  // namespace

RulingSetResult ruling_set(const Graph& g, std::span<const Node> restrict_to, RoundLedger ledger) {
  if (restrict_to.empty()) throw std::invalid_argument("ruling_set: empty node set");
  const auto inside = mask_of(g, restrict_to);
  RulingSetProgram program(inside, g.id_bits());
  auto run = run_sync(g, program, ledger, static_cast<std::uint64_t>(g.id_bits()));
  if (!run.all_halted) throw std::logic_error("ruling set did not halt after b rounds");

  RulingSetResult out;
  out.ledger = run.ledger;
  const std::size_t n = g.node_count();
  out.parent.assign(n, std::nullopt);
  out.depth.assign(n, kUnreachable);
  for (Node v = 0; v < n; ++v) {
    if (!inside[v]) continue;
    if (run.states[v].candidate) {
      out.members.push_back(v);
      out.depth[v] = 0;
    } else {
      out.parent[v] = run.states[v].parent;
    }
  }
  // A node leaving in round i points to a node that survives round i, so
  // following parents strictly increases the leave round and terminates.
  for (Node v = 0; v < n; ++v) {
    if (!inside[v] || out.depth[v] != kUnreachable) continue;
    std::vector<Node> chain;
    Node x = v;
    while (out.depth[x] == kUnreachable) {
      chain.push_back(x);
      x = *out.parent[x];
    }
    Distance d = out.depth[x];
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) out.depth[*it] = ++d;
  }
  return out;
}

std::vector<RulingSetProgram::State> ruling_set_states_after(const Graph& g,
                                                             std::span<const Node> restrict_to,
                                                             std::uint64_t rounds) {
  const auto inside = mask_of(g, restrict_to);
  RulingSetProgram program(inside, g.id_bits());
  return run_sync(g, program, RoundLedger::local(), rounds).states;
}

}  // namespace netdecomp
