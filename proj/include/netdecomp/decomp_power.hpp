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

#ifndef NETDECOMP_DECOMP_POWER_HPP_
#define NETDECOMP_DECOMP_POWER_HPP_

#include <optional>
#include <span>
#include <vector>

#include "netdecomp/decomp_weak.hpp"

namespace netdecomp {

/// Per-node outcome of one k-iteration token BFS from the blue nodes.
struct TokenBfsState {
  std::vector<Distance> level;                // first iteration a token arrived; 0 for blue
  std::vector<std::optional<Node>> token;     // smallest-label token received (a label root)
  std::vector<std::optional<Node>> parent;    // smallest sender of that token
  std::vector<std::optional<Node>> forwarded; // token sent on, if any
};

/**
 * One-color clustering of G^k run on G. Blue nodes (including those of
 * stopped clusters) start a k-iteration BFS carrying their label; a node
 * first reached in iteration d keeps the smallest label it got then. Alive
 * red nodes propose to that cluster over the BFS path; dead and outside
 * nodes relay tokens and join the carrying tree as nonterminals. A relay
 * reached at the same iteration as in the previous step of the phase passes
 * its previous token on unchanged.
 */
class PowerClustering : public OneColorClustering {
 public:
  PowerClustering(const Graph& g, std::span<const Node> nodes, RoundLedger& ledger, int k);

  void begin_phase(int phase) override;
  bool run_step() override;

  /// Token BFS for the current state, without changing anything.
  TokenBfsState token_bfs() const;

 private:
  std::vector<Distance> prev_level_;
  std::vector<std::optional<Node>> prev_token_;
};

/// One-color clustering of G^k; same-run clusters end up at least k + 1 apart.
OneColorResult cluster_one_color_power(const Graph& g, std::span<const Node> nodes, int k,
                                       RoundLedger& ledger, const PhaseObserver& observer = {});

/// Weak decomposition of G^k computed on G.
WeakDecomposition power_decomposition(const Graph& g, int k,
                                      RoundLedger ledger = RoundLedger::local(),
                                      const PhaseObserver& observer = {});

}  // namespace netdecomp

#endif  // NETDECOMP_DECOMP_POWER_HPP_
