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

#ifndef NETDECOMP_GRAPH_HPP_
#define NETDECOMP_GRAPH_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace netdecomp {

/// Node index in [0, node_count).
using Node = std::uint32_t;
/// Unique per-node identifier; its bit length is the `b` of the algorithms.
using NodeIdent = std::uint64_t;

/// Hop distance; kUnreachable marks nodes not reached from the source set.
using Distance = std::int32_t;
inline constexpr Distance kUnreachable = -1;

/// Per-node hop distance from a source set.
using DistanceMap = std::vector<Distance>;

/// Number of bits needed to write `value`, at least 1.
int bit_length(std::uint64_t value);

/// ceil(log2(n)) for n >= 1; 0 for n == 1.
int ceil_log2(std::uint64_t n);

/// floor(log2(n)) for n >= 1.
int floor_log2(std::uint64_t n);

/**
 * Immutable undirected simple graph with unique node identifiers.
 *
 * Adjacency is stored in CSR form with each neighbor range sorted by node
 * index. Construction validates the input: no self-loops, endpoints in range,
 * identifiers pairwise distinct. Parallel edges are merged.
 */
class Graph {
 public:
  Graph() = default;

  /// Throws std::invalid_argument on out-of-range endpoints, self-loops,
  /// wrong identifier count, or duplicate identifiers.
  static Graph from_edge_list(std::size_t n,
                              std::span<const std::pair<Node, Node>> edges,
                              std::optional<std::vector<NodeIdent>> ids = std::nullopt);

  std::size_t node_count() const { return ids_.size(); }
  std::size_t edge_count() const { return neighbors_.size() / 2; }

  std::span<const Node> neighbors(Node v) const {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Node v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const;
  bool has_edge(Node u, Node v) const;

  NodeIdent id(Node v) const { return ids_[v]; }
  const std::vector<NodeIdent>& ids() const { return ids_; }

  /// Bit length of the largest identifier (>= 1).
  int id_bits() const { return id_bits_; }

  /// Edges (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<Node, Node>> edges() const;

  /// Same topology, new identifiers.
  Graph with_ids(std::vector<NodeIdent> ids) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<Node> neighbors_;
  std::vector<NodeIdent> ids_;
  int id_bits_ = 1;
};

/// Explicit k-th power: u ~ v iff 1 <= dist_G(u, v) <= k. Identifiers kept.
Graph power(const Graph& g, int k);

/// Exact multi-source hop distances.
DistanceMap bfs_distances(const Graph& g, std::span<const Node> sources);

/// Multi-source BFS restricted to the nodes with `inside[v] != 0` and
/// truncated at `max_depth` hops (negative = unbounded). Sources outside the
/// mask are ignored.
DistanceMap bfs_distances_within(const Graph& g, std::span<const Node> sources,
                                 std::span<const char> inside, Distance max_depth = -1);

/// Induced subgraph on `nodes` (in the given order) with identifiers kept.
/// Returns the subgraph and, for each subgraph node, its index in `g`.
std::pair<Graph, std::vector<Node>> induced_subgraph(const Graph& g, std::span<const Node> nodes);

// Generators. Identifiers default to node indices.
Graph gen_path(std::size_t n);
Graph gen_cycle(std::size_t n);
Graph gen_complete(std::size_t n);

/// Nodes are vectors in Z_side^dim; u ~ v iff every coordinate differs by at
/// most 1 modulo side. Requires side >= 3.
Graph gen_torus(int dim, int side);

/// Each unordered pair {u, v}, u < v in lexicographic order, is kept when the
/// next draw of a 64-bit Mersenne twister seeded with `seed` falls below p.
Graph gen_random(std::size_t n, double p, std::uint64_t seed);

/// Identifiers replaced by a seeded permutation of 0..n-1.
Graph shuffle_ids(const Graph& g, std::uint64_t seed);

}  // namespace netdecomp

#endif  // NETDECOMP_GRAPH_HPP_
