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

#include "netdecomp/decomp_power.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace netdecomp {

PowerClustering::PowerClustering(const Graph& g, std::span<const Node> nodes, RoundLedger& ledger,
                                 int k)
    : OneColorClustering(g, nodes, ledger, k) {}

void PowerClustering::begin_phase(int phase) {
  OneColorClustering::begin_phase(phase);
  prev_level_.assign(g_.node_count(), kUnreachable);
  prev_token_.assign(g_.node_count(), std::nullopt);
}

TokenBfsState PowerClustering::token_bfs() const {
  const std::size_t n = g_.node_count();
  TokenBfsState st;
  st.level.assign(n, kUnreachable);
  st.token.assign(n, std::nullopt);
  st.parent.assign(n, std::nullopt);
  st.forwarded.assign(n, std::nullopt);

  std::vector<Node> frontier;
  for (Node v = 0; v < n; ++v) {
    if (state_.alive(v) && is_blue(v)) {
      st.level[v] = 0;
      st.token[v] = state_.label[v];
      st.forwarded[v] = state_.label[v];
      frontier.push_back(v);
    }
  }
  std::vector<Node> next;
  for (Distance d = 1; d <= k_ && !frontier.empty(); ++d) {
    next.clear();
    for (Node u : frontier) {
      if (!st.forwarded[u]) continue;
      const Node carried = *st.forwarded[u];
      for (Node w : g_.neighbors(u)) {
        if (st.level[w] == kUnreachable) {
          st.level[w] = d;
          st.token[w] = carried;
          st.parent[w] = u;
          next.push_back(w);
        } else if (st.level[w] == d) {
          const auto mine = std::pair{g_.id(carried), u};
          const auto held = std::pair{g_.id(*st.token[w]), *st.parent[w]};
          if (mine < held) {
            st.token[w] = carried;
            st.parent[w] = u;
          }
        }
      }
    }
    std::sort(next.begin(), next.end());
    for (Node w : next) {
      if (d == k_) continue;
      if (!state_.alive(w) && prev_level_[w] == d) {
        st.forwarded[w] = prev_token_[w];
      } else {
        st.forwarded[w] = st.token[w];
      }
    }
    frontier.swap(next);
  }
  return st;
}

bool PowerClustering::run_step() {
  const TokenBfsState bfs = token_bfs();
  std::vector<Proposal> proposals;
  std::vector<Node> reached;
  for (Node v = 0; v < g_.node_count(); ++v) {
    if (bfs.level[v] <= 0) continue;
    reached.push_back(v);
    if (state_.alive(v)) proposals.push_back({v, *bfs.token[v], *bfs.parent[v], bfs.level[v]});
  }
  if (proposals.empty()) return false;
  if (static_cast<std::uint64_t>(state_.step) >= params_.steps_per_phase) {
    throw std::logic_error("red nodes still in range after all steps of phase " +
                           std::to_string(state_.phase));
  }

  ledger_.add_rounds(static_cast<std::uint64_t>(k_));
  ledger_.observe_message_bits(static_cast<std::uint64_t>(params_.id_bits));
  charge_step();
  const auto verdicts = decide(proposals);

  std::vector<Verdict> verdict_of(g_.node_count(), Verdict::kRefused);
  for (std::size_t j = 0; j < proposals.size(); ++j) verdict_of[proposals[j].proposer] = verdicts[j];

  // Parents sit one level closer to the blue set, so level order attaches them first.
  std::stable_sort(reached.begin(), reached.end(),
                   [&](Node a, Node b) { return bfs.level[a] < bfs.level[b]; });
  for (Node w : reached) {
    const Distance d = bfs.level[w];
    const Node root = *bfs.token[w];
    const Node parent = *bfs.parent[w];
    if (state_.alive(w)) {
      switch (verdict_of[w]) {
        case Verdict::kAccepted:
          join(w, root, parent, d);
          break;
        case Verdict::kDenied:
          state_.status[w] = NodeStatus::kDead;
          if (d < k_) attach_edge(root, w, parent, d, false);
          break;
        case Verdict::kRefused:
          break;
      }
    } else if (prev_level_[w] != d && d < k_ && !forest_.contains(root, w)) {
      attach_edge(root, w, parent, d, true);
    }
  }

  prev_level_ = bfs.level;
  prev_token_ = bfs.forwarded;
  ++state_.step;
  return true;
}

OneColorResult cluster_one_color_power(const Graph& g, std::span<const Node> nodes, int k,
                                       RoundLedger& ledger, const PhaseObserver& observer) {
  PowerClustering engine(g, nodes, ledger, k);
  return engine.run(observer);
}

WeakDecomposition power_decomposition(const Graph& g, int k, RoundLedger ledger,
                                      const PhaseObserver& observer) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  WeakDecomposition dec;
  dec.algorithm = "power";
  dec.k = k;
  dec.color_of.assign(g.node_count(), -1);
  std::vector<Node> remaining(g.node_count());
  for (Node v = 0; v < g.node_count(); ++v) remaining[v] = v;
  while (!remaining.empty()) {
    OneColorResult res = cluster_one_color_power(g, remaining, k, ledger, observer);
    if (res.clustered.empty()) throw std::logic_error("one-color clustering made no progress");
    remaining = res.dead;
    append_color(dec, std::move(res));
  }
  dec.ledger = ledger;
  return dec;
}

}  // namespace netdecomp
