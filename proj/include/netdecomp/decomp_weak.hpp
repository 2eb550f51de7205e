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

#ifndef NETDECOMP_DECOMP_WEAK_HPP_
#define NETDECOMP_DECOMP_WEAK_HPP_

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "netdecomp/cluster_state.hpp"
#include "netdecomp/graph.hpp"
#include "netdecomp/sync_engine.hpp"

namespace netdecomp {

/**
 * Phase/step skeleton shared by the one-color clustering variants.
 *
 * Phase i looks at label bit i (least significant first): clusters whose
 * label has the bit clear are blue, the others red. Steps repeat until the
 * variant reports that no red node can propose. Proposals to a blue cluster
 * A are accepted when their count p satisfies p > |A| / (2b); otherwise the
 * proposers die and A stops growing for the rest of the phase.
 */
class OneColorClustering {
 public:
  virtual ~OneColorClustering() = default;
  OneColorClustering(const OneColorClustering&) = delete;
  OneColorClustering& operator=(const OneColorClustering&) = delete;

  const Graph& graph() const { return g_; }
  const DecompositionParams& params() const { return params_; }
  const ClusterState& state() const { return state_; }
  const SteinerForest& forest() const { return forest_; }
  int k() const { return k_; }
  /// Current number of alive nodes carrying `root`'s label.
  std::size_t cluster_size(Node root) const { return size_[root]; }
  bool is_blue(Node v) const { return ((g_.id(state_.label[v]) >> state_.phase) & 1U) == 0; }
  bool stopped(Node root) const { return stopped_[root] != 0; }

  /// Fixes the blue clusters of phase `phase` and clears the per-phase counters.
  virtual void begin_phase(int phase);
  /// Executes one step of the current phase. Returns false, changing
  /// nothing, when no red node can propose.
  virtual bool run_step() = 0;
  /// begin_phase and steps until quiescence. Throws std::logic_error when
  /// red nodes are still proposing after R steps.
  PhaseStats run_phase(int phase);
  /// Runs every phase, calling `observer` after each, and returns the result.
  OneColorResult run(const PhaseObserver& observer = {});
  OneColorResult result() const;

 protected:
  OneColorClustering(const Graph& g, std::span<const Node> nodes, RoundLedger& ledger, int k);

  struct Proposal {
    Node proposer;
    Node root;  // target cluster
    Node via;   // proposer's parent in the target tree
    Distance level;
  };
  enum class Verdict : std::uint8_t { kAccepted, kDenied, kRefused };

  /// Decides every proposal of a step at once against cluster sizes from
  /// before the step. Proposals to already-stopped clusters are refused.
  std::vector<Verdict> decide(const std::vector<Proposal>& proposals);
  /// Moves `v` into the cluster of `root`, hanging it below `via`.
  void join(Node v, Node root, Node via, Distance level);
  void attach_edge(Node root, Node v, Node parent, Distance level, bool relay);
  void charge_step();

  const Graph& g_;
  DecompositionParams params_;
  int k_;
  RoundLedger& ledger_;
  ClusterState state_;
  SteinerForest forest_;
  std::size_t attempted_ = 0;
  std::vector<std::size_t> size_;
  std::vector<Node> blue_roots_;
  std::vector<char> stopped_;
  std::vector<std::uint64_t> growth_;
  std::vector<std::size_t> pending_;
  std::unordered_map<std::uint64_t, std::uint64_t> edge_additions_;
  std::vector<PhaseStats> phases_;
  std::vector<AnchorEvent> anchors_;
};

/// Direct-neighbor variant: a red node proposes to the adjacent non-stopped
/// blue cluster of smallest label, through its smallest-index neighbor there.
/// Nodes outside the clustered set are ignored.
class WeakClustering : public OneColorClustering {
 public:
  WeakClustering(const Graph& g, std::span<const Node> nodes, RoundLedger& ledger);
  bool run_step() override;
};

/// Clusters `nodes` (non-empty, else std::invalid_argument) with one color.
OneColorResult cluster_one_color(const Graph& g, std::span<const Node> nodes, RoundLedger& ledger,
                                 const PhaseObserver& observer = {});

/// Repeats the one-color clustering on the unclustered remainder until every
/// node has a color.
WeakDecomposition weak_decomposition(const Graph& g, RoundLedger ledger = RoundLedger::local(),
                                     const PhaseObserver& observer = {});

}  // namespace netdecomp

#endif  // NETDECOMP_DECOMP_WEAK_HPP_
