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

#ifndef NETDECOMP_CLUSTER_STATE_HPP_
#define NETDECOMP_CLUSTER_STATE_HPP_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "netdecomp/graph.hpp"
#include "netdecomp/sync_engine.hpp"

namespace netdecomp {

enum class NodeStatus : std::uint8_t { kAlive, kDead, kOutside };

/// Constants of one decomposition run. R = 10 * b * ceil(log2 n).
struct DecompositionParams {
  int id_bits = 1;
  int log_n = 0;
  std::uint64_t steps_per_phase = 0;

  static DecompositionParams of(const Graph& g);

  /// Observation bound on accepting steps of one blue cluster: 4 b ceil(log2 n).
  std::uint64_t growth_step_bound() const { return 4ULL * id_bits * log_n; }
};

/**
 * Per-node cluster labels during the construction of one color.
 *
 * A label is stored as the index of the node whose identifier equals it: the
 * initial singleton member and the root of the label's Steiner tree.
 */
struct ClusterState {
  std::vector<NodeStatus> status;
  std::vector<Node> label;
  int phase = 0;
  int step = 0;

  bool alive(Node v) const { return status[v] == NodeStatus::kAlive; }
};

/// b-bit binary string, most significant bit first.
std::string label_bits(NodeIdent label, int bits);

/**
 * Rooted Steiner trees, one per label root, over graph nodes.
 *
 * A node belongs to several trees: terminals of its current cluster, and
 * nonterminal leftovers from clusters it left or died in. Membership is kept
 * per node, which is small (one slot per label change).
 */
class SteinerForest {
 public:
  SteinerForest() = default;
  explicit SteinerForest(std::size_t n) : slots_(n), nodes_(n), radius_(n, 0) {}

  /// Starts the tree of `root` with the root as its only node.
  void add_root(Node root);
  bool contains(Node root, Node v) const;
  /// Hop depth of `v` in the tree of `root`; throws std::out_of_range when absent.
  int depth(Node root, Node v) const;
  /// Adds `v` below `parent`, which must already be in the tree.
  void attach(Node root, Node v, Node parent);
  /// Removes `v`, which must be a leaf.
  void detach(Node root, Node v);

  int radius(Node root) const { return radius_[root]; }
  /// (child, parent) pairs of the tree, sorted by child.
  std::vector<std::pair<Node, Node>> parent_edges(Node root) const;
  /// Nodes of the tree, ascending.
  std::vector<Node> tree_nodes(Node root) const;

  /// Largest number of trees (among `roots`) sharing one graph edge.
  std::size_t max_edge_multiplicity(std::span<const Node> roots) const;
  /// Largest number of trees sharing one graph edge, over all trees.
  std::size_t max_edge_multiplicity() const;

 private:
  struct Slot {
    Node root;
    Node parent;
    int depth;
  };
  const Slot* find(Node root, Node v) const;

  std::vector<std::vector<Slot>> slots_;  // per node
  std::vector<std::vector<Node>> nodes_;  // per root
  std::vector<int> radius_;               // per root
};

/// Output form of one Steiner tree.
struct SteinerTree {
  Node root = 0;
  std::vector<std::pair<Node, Node>> parent;  // (child, parent), sorted by child
  std::vector<Node> terminals;                // ascending
  int radius = 0;

  friend bool operator==(const SteinerTree&, const SteinerTree&) = default;
};

struct Cluster {
  int color = 0;
  NodeIdent label = 0;
  std::vector<Node> members;  // ascending
  SteinerTree tree;

  friend bool operator==(const Cluster&, const Cluster&) = default;
};

/// Measurements of one phase of one color.
struct PhaseStats {
  int phase = 0;
  std::size_t alive_before = 0;
  std::size_t alive_after = 0;
  std::size_t deaths = 0;
  std::uint64_t steps = 0;
  std::uint64_t max_growth_steps = 0;    // accepting steps of the busiest blue cluster
  std::uint64_t max_edge_additions = 0;  // tree attachments over one edge in this phase
  int max_tree_radius = 0;               // over all trees, after the phase

  friend bool operator==(const PhaseStats&, const PhaseStats&) = default;
};

/// One tree attachment made by the token-BFS variant.
struct AnchorEvent {
  int phase = 0;
  int step = 0;
  Node node = 0;
  Node tree_root = 0;
  Node parent = 0;
  Distance level = 0;  // BFS distance to the blue set in that step
  bool dead = false;   // dead or outside (nonterminal relay) rather than a red proposer

  friend bool operator==(const AnchorEvent&, const AnchorEvent&) = default;
};

struct OneColorResult {
  std::size_t attempted = 0;   // |S|
  std::vector<Node> clustered;  // S', ascending
  std::vector<Node> dead;       // S \ S', ascending
  std::vector<Cluster> clusters;  // by label; `color` left at 0
  std::vector<PhaseStats> phases;
  std::size_t max_edge_multiplicity = 0;  // over the output trees
  std::vector<AnchorEvent> anchors;       // token-BFS variant only
};

/// State after a phase, handed to observers (invariant checkers).
struct PhaseSnapshot {
  const Graph* graph = nullptr;
  int phase = 0;
  int k = 1;
  const ClusterState* state = nullptr;
  const SteinerForest* forest = nullptr;
  PhaseStats stats;
};
using PhaseObserver = std::function<void(const PhaseSnapshot&)>;

/// Per-color summary kept by full decompositions.
struct ColorRun {
  std::size_t attempted = 0;
  std::size_t clustered = 0;
  std::vector<PhaseStats> phases;
  std::size_t max_edge_multiplicity = 0;
};

/// Weak-diameter decomposition; clusters sorted by (color, label).
struct WeakDecomposition {
  std::string algorithm = "weak";
  int k = 1;  // same-color clusters are at least k + 1 apart
  int colors = 0;
  std::vector<int> color_of;
  std::vector<Cluster> clusters;
  std::vector<ColorRun> runs;
  RoundLedger ledger;
};

/// Converts the final state of one color into output clusters.
OneColorResult collect_one_color(const Graph& g, const ClusterState& state,
                                 const SteinerForest& forest, std::size_t attempted);

/// Appends one color's clusters to `dec` and assigns the color to its nodes.
void append_color(WeakDecomposition& dec, OneColorResult&& result);

}  // namespace netdecomp

#endif  // NETDECOMP_CLUSTER_STATE_HPP_
