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

#include "netdecomp/cluster_state.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace netdecomp {

DecompositionParams DecompositionParams::of(const Graph& g) {
  DecompositionParams p;
  p.id_bits = g.id_bits();
  p.log_n = ceil_log2(g.node_count());
  p.steps_per_phase = 10ULL * p.id_bits * p.log_n;
  return p;
}

std::string label_bits(NodeIdent label, int bits) {
  std::string s(static_cast<std::size_t>(bits), '0');
  for (int i = 0; i < bits; ++i) {
    if ((label >> i) & 1U) s[static_cast<std::size_t>(bits - 1 - i)] = '1';
  }
  return s;
}

void SteinerForest::add_root(Node root) {
  if (!nodes_[root].empty()) throw std::logic_error("tree root added twice");
  slots_[root].push_back({root, root, 0});
  nodes_[root].push_back(root);
  radius_[root] = 0;
}

const SteinerForest::Slot* SteinerForest::find(Node root, Node v) const {
  for (const auto& s : slots_[v]) {
    if (s.root == root) return &s;
  }
  return nullptr;
}

bool SteinerForest::contains(Node root, Node v) const { return find(root, v) != nullptr; }

int SteinerForest::depth(Node root, Node v) const {
  const Slot* s = find(root, v);
  if (!s) throw std::out_of_range("node not in Steiner tree");
  return s->depth;
}

void SteinerForest::attach(Node root, Node v, Node parent) {
  const Slot* p = find(root, parent);
  if (!p) throw std::logic_error("Steiner tree parent is not in the tree");
  if (find(root, v)) throw std::logic_error("node already in Steiner tree");
  const int d = p->depth + 1;
  slots_[v].push_back({root, parent, d});
  nodes_[root].push_back(v);
  radius_[root] = std::max(radius_[root], d);
}

void SteinerForest::detach(Node root, Node v) {
  for (Node w : nodes_[root]) {
    const Slot* s = find(root, w);
    if (w != v && s->parent == v) throw std::logic_error("detaching a non-leaf");
  }
  auto& vs = slots_[v];
  vs.erase(std::remove_if(vs.begin(), vs.end(), [&](const Slot& s) { return s.root == root; }),
           vs.end());
  auto& ns = nodes_[root];
  ns.erase(std::remove(ns.begin(), ns.end(), v), ns.end());
  int r = 0;
  for (Node w : ns) r = std::max(r, find(root, w)->depth);
  radius_[root] = r;
}

std::vector<std::pair<Node, Node>> SteinerForest::parent_edges(Node root) const {
  std::vector<std::pair<Node, Node>> out;
  for (Node v : nodes_[root]) {
    if (v != root) out.emplace_back(v, find(root, v)->parent);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Node> SteinerForest::tree_nodes(Node root) const {
  std::vector<Node> out = nodes_[root];
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::uint64_t edge_key(Node a, Node b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace

std::size_t SteinerForest::max_edge_multiplicity(std::span<const Node> roots) const {
  std::unordered_map<std::uint64_t, std::size_t> count;
  std::size_t best = 0;
  for (Node root : roots) {
    for (Node v : nodes_[root]) {
      if (v == root) continue;
      best = std::max(best, ++count[edge_key(v, find(root, v)->parent)]);
    }
  }
  return best;
}

std::size_t SteinerForest::max_edge_multiplicity() const {
  std::vector<Node> roots;
  for (Node r = 0; r < nodes_.size(); ++r) {
    if (!nodes_[r].empty()) roots.push_back(r);
  }
  return max_edge_multiplicity(roots);
}

OneColorResult collect_one_color(const Graph& g, const ClusterState& state,
                                 const SteinerForest& forest, std::size_t attempted) {
  OneColorResult out;
  out.attempted = attempted;
  std::map<NodeIdent, std::vector<Node>> by_label;
  for (Node v = 0; v < g.node_count(); ++v) {
    if (state.status[v] == NodeStatus::kAlive) {
      out.clustered.push_back(v);
      by_label[g.id(state.label[v])].push_back(v);
    } else if (state.status[v] == NodeStatus::kDead) {
      out.dead.push_back(v);
    }
  }
  std::vector<Node> roots;
  for (auto& [label, members] : by_label) {
    Node root = state.label[members.front()];
    roots.push_back(root);
    Cluster c;
    c.label = label;
    c.tree.root = root;
    c.tree.parent = forest.parent_edges(root);
    c.tree.terminals = members;
    c.tree.radius = forest.radius(root);
    c.members = std::move(members);
    out.clusters.push_back(std::move(c));
  }
  out.max_edge_multiplicity = forest.max_edge_multiplicity(roots);
  return out;
}

void append_color(WeakDecomposition& dec, OneColorResult&& result) {
  const int color = dec.colors++;
  for (Node v : result.clustered) dec.color_of[v] = color;
  for (auto& c : result.clusters) {
    c.color = color;
    dec.clusters.push_back(std::move(c));
  }
  dec.runs.push_back(ColorRun{result.attempted, result.clustered.size(), std::move(result.phases),
                              result.max_edge_multiplicity});
}

}  // namespace netdecomp
