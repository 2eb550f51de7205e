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

#include "netdecomp/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace netdecomp {

int bit_length(std::uint64_t value) {
  return value == 0 ? 1 : static_cast<int>(std::bit_width(value));
}

int ceil_log2(std::uint64_t n) {
  if (n <= 1) return 0;
  return static_cast<int>(std::bit_width(n - 1));
}

int floor_log2(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("floor_log2(0)");
  return static_cast<int>(std::bit_width(n)) - 1;
}

Graph Graph::from_edge_list(std::size_t n, std::span<const std::pair<Node, Node>> edges,
                            std::optional<std::vector<NodeIdent>> ids) {
  if (n == 0) throw std::invalid_argument("graph must have at least one node");
  std::vector<std::pair<Node, Node>> directed;
  directed.reserve(edges.size() * 2);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) + ", " +
                                  std::to_string(v) + ")");
    }
    if (u == v) throw std::invalid_argument("self-loop at node " + std::to_string(u));
    directed.emplace_back(u, v);
    directed.emplace_back(v, u);
  }
  std::sort(directed.begin(), directed.end());
  directed.erase(std::unique(directed.begin(), directed.end()), directed.end());

  Graph g;
  g.offsets_.assign(n + 1, 0);
  g.neighbors_.reserve(directed.size());
  for (auto [u, v] : directed) {
    ++g.offsets_[u + 1];
    g.neighbors_.push_back(v);
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());

  if (ids) {
    if (ids->size() != n) throw std::invalid_argument("identifier count does not match node count");
    g.ids_ = std::move(*ids);
  } else {
    g.ids_.resize(n);
    std::iota(g.ids_.begin(), g.ids_.end(), NodeIdent{0});
  }
  std::unordered_set<NodeIdent> seen;
  seen.reserve(n);
  for (NodeIdent id : g.ids_) {
    if (!seen.insert(id).second) {
      throw std::invalid_argument("duplicate identifier " + std::to_string(id));
    }
  }
  g.id_bits_ = bit_length(*std::max_element(g.ids_.begin(), g.ids_.end()));
  return g;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (Node v = 0; v < node_count(); ++v) best = std::max(best, degree(v));
  return best;
}

bool Graph::has_edge(Node u, Node v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<Node, Node>> Graph::edges() const {
  std::vector<std::pair<Node, Node>> out;
  out.reserve(edge_count());
  for (Node u = 0; u < node_count(); ++u) {
    for (Node v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::with_ids(std::vector<NodeIdent> ids) const {
  auto e = edges();
  return from_edge_list(node_count(), e, std::move(ids));
}

DistanceMap bfs_distances(const Graph& g, std::span<const Node> sources) {
  std::vector<char> all(g.node_count(), 1);
  return bfs_distances_within(g, sources, all);
}

DistanceMap bfs_distances_within(const Graph& g, std::span<const Node> sources,
                                 std::span<const char> inside, Distance max_depth) {
  DistanceMap dist(g.node_count(), kUnreachable);
  std::vector<Node> frontier;
  for (Node s : sources) {
    if (inside[s] && dist[s] == kUnreachable) {
      dist[s] = 0;
      frontier.push_back(s);
    }
  }
  std::vector<Node> next;
  for (Distance d = 1; !frontier.empty() && (max_depth < 0 || d <= max_depth); ++d) {
    next.clear();
    for (Node u : frontier) {
      for (Node w : g.neighbors(u)) {
        if (inside[w] && dist[w] == kUnreachable) {
          dist[w] = d;
          next.push_back(w);
        }
      }
    }
    frontier.swap(next);
  }
  return dist;
}

Graph power(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("power: k must be >= 1");
  if (k == 1) return g;
  const std::size_t n = g.node_count();
  std::vector<std::pair<Node, Node>> edges;
  std::vector<Distance> dist(n, kUnreachable);
  std::vector<Node> touched, frontier, next;
  for (Node s = 0; s < n; ++s) {
    touched.assign(1, s);
    frontier.assign(1, s);
    dist[s] = 0;
    for (Distance d = 1; d <= k && !frontier.empty(); ++d) {
      next.clear();
      for (Node u : frontier) {
        for (Node w : g.neighbors(u)) {
          if (dist[w] != kUnreachable) continue;
          dist[w] = d;
          next.push_back(w);
          touched.push_back(w);
        }
      }
      frontier.swap(next);
    }
    for (Node w : touched) {
      if (s < w) edges.emplace_back(s, w);
      dist[w] = kUnreachable;
    }
  }
  return Graph::from_edge_list(n, edges, g.ids());
}

std::pair<Graph, std::vector<Node>> induced_subgraph(const Graph& g, std::span<const Node> nodes) {
  constexpr Node kAbsent = static_cast<Node>(-1);
  std::vector<Node> local(g.node_count(), kAbsent);
  for (Node i = 0; i < nodes.size(); ++i) local[nodes[i]] = i;
  std::vector<std::pair<Node, Node>> edges;
  std::vector<NodeIdent> ids;
  ids.reserve(nodes.size());
  for (Node i = 0; i < nodes.size(); ++i) {
    ids.push_back(g.id(nodes[i]));
    for (Node w : g.neighbors(nodes[i])) {
      if (local[w] != kAbsent && i < local[w]) edges.emplace_back(i, local[w]);
    }
  }
  return {Graph::from_edge_list(nodes.size(), edges, std::move(ids)),
          std::vector<Node>(nodes.begin(), nodes.end())};
}

Graph gen_path(std::size_t n) {
  std::vector<std::pair<Node, Node>> edges;
  for (Node v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Graph::from_edge_list(n, edges);
}

Graph gen_cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 nodes");
  std::vector<std::pair<Node, Node>> edges;
  for (Node v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Node>((v + 1) % n));
  return Graph::from_edge_list(n, edges);
}

Graph gen_complete(std::size_t n) {
  std::vector<std::pair<Node, Node>> edges;
  for (Node u = 0; u < n; ++u)
    for (Node v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edge_list(n, edges);
}

Graph gen_torus(int dim, int side) {
  if (dim < 1) throw std::invalid_argument("torus dimension must be >= 1");
  if (side < 3) throw std::invalid_argument("torus side must be >= 3");
  std::size_t n = 1;
  for (int d = 0; d < dim; ++d) {
    n *= static_cast<std::size_t>(side);
    if (n > (std::size_t{1} << 26)) throw std::invalid_argument("torus too large");
  }
  // Offsets in {-1, 0, 1}^dim except the zero vector; node index is the
  // mixed-radix number of its coordinates.
  std::vector<std::pair<Node, Node>> edges;
  std::vector<int> coord(dim), offset(dim);
  for (Node u = 0; u < n; ++u) {
    std::size_t rest = u;
    for (int d = 0; d < dim; ++d) {
      coord[d] = static_cast<int>(rest % side);
      rest /= side;
    }
    std::fill(offset.begin(), offset.end(), -1);
    while (true) {
      bool zero = std::all_of(offset.begin(), offset.end(), [](int o) { return o == 0; });
      if (!zero) {
        std::size_t v = 0;
        for (int d = dim - 1; d >= 0; --d) {
          v = v * side + static_cast<std::size_t>((coord[d] + offset[d] + side) % side);
        }
        if (u < v) edges.emplace_back(u, static_cast<Node>(v));
      }
      int d = 0;
      while (d < dim && offset[d] == 1) offset[d++] = -1;
      if (d == dim) break;
      ++offset[d];
    }
  }
  return Graph::from_edge_list(n, edges);
}

Graph gen_random(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must be in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Node, Node>> edges;
  for (Node u = 0; u < n; ++u) {
    for (Node v = u + 1; v < n; ++v) {
      double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (x < p) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edge_list(n, edges);
}

Graph shuffle_ids(const Graph& g, std::uint64_t seed) {
  std::vector<NodeIdent> ids(g.node_count());
  std::iota(ids.begin(), ids.end(), NodeIdent{0});
  std::mt19937_64 rng(seed);
  // Fisher-Yates with explicit modulo draws so the result does not depend on
  // the standard library's distribution implementation.
  for (std::size_t i = ids.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(ids[i - 1], ids[j]);
  }
  return g.with_ids(std::move(ids));
}

}  // namespace netdecomp
