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

#include "netdecomp/verifier.hpp"

#include <algorithm>
#include <unordered_map>
#include <utility>

namespace netdecomp {

using nlohmann::json;

bool Report::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void Report::add(std::string name, bool pass, json witness) {
  checks.push_back({std::move(name), pass, pass ? json(nullptr) : std::move(witness)});
}

const Check* Report::first_failure() const {
  for (const auto& c : checks) {
    if (!c.pass) return &c;
  }
  return nullptr;
}

json Report::to_json() const {
  json arr = json::array();
  for (const auto& c : checks) arr.push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
  return {{"ok", ok()}, {"checks", arr}};
}

namespace {

std::uint64_t edge_key(Node a, Node b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

// Two distinct groups within k hops of each other, found on the edge where
// their truncated Voronoi regions meet. group[v] < 0 means "no group".
std::optional<json> close_groups(const Graph& g, std::span<const int> group, int k) {
  const std::size_t n = g.node_count();
  std::vector<Distance> dist(n, kUnreachable);
  std::vector<int> owner(n, -1);
  std::vector<Node> frontier;
  for (Node v = 0; v < n; ++v) {
    if (group[v] >= 0) {
      dist[v] = 0;
      owner[v] = group[v];
      frontier.push_back(v);
    }
  }
  std::vector<Node> next;
  for (Distance d = 1; d <= k && !frontier.empty(); ++d) {
    next.clear();
    for (Node u : frontier) {
      for (Node w : g.neighbors(u)) {
        if (dist[w] == kUnreachable) {
          dist[w] = d;
          owner[w] = owner[u];
          next.push_back(w);
        }
      }
    }
    frontier.swap(next);
  }
  for (Node u = 0; u < n; ++u) {
    if (dist[u] == kUnreachable) continue;
    for (Node w : g.neighbors(u)) {
      if (w < u || dist[w] == kUnreachable || owner[w] == owner[u]) continue;
      if (dist[u] + dist[w] + 1 <= k) {
        return json{{"edge", {u, w}},
                    {"groups", {owner[u], owner[w]}},
                    {"distance_at_most", dist[u] + dist[w] + 1}};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Report verify_weak(const Graph& g, const WeakDecomposition& dec, const WeakBounds& bounds) {
  Report report;
  const std::size_t n = g.node_count();

  // Totality: every node has a color and lies in exactly one cluster of that color.
  {
    json witness = nullptr;
    std::vector<int> seen(n, 0);
    if (dec.color_of.size() != n) {
      witness = {{"reason", "color_of has wrong length"}, {"length", dec.color_of.size()}};
    }
    for (std::size_t ci = 0; witness.is_null() && ci < dec.clusters.size(); ++ci) {
      const auto& c = dec.clusters[ci];
      for (Node v : c.members) {
        if (v >= n || dec.color_of[v] != c.color) {
          witness = {{"reason", "member color mismatch"}, {"cluster", ci}, {"node", v}};
          break;
        }
        ++seen[v];
      }
    }
    for (Node v = 0; witness.is_null() && v < n; ++v) {
      if (dec.color_of[v] < 0 || dec.color_of[v] >= dec.colors) {
        witness = {{"reason", "node without valid color"}, {"node", v}};
      } else if (seen[v] != 1) {
        witness = {{"reason", "node not in exactly one cluster"}, {"node", v}, {"count", seen[v]}};
      }
    }
    report.add("totality", witness.is_null(), witness);
    if (!witness.is_null()) return report;
  }

  // Same-color clusters at distance >= k + 1.
  {
    json witness = nullptr;
    std::vector<int> group(n, -1);
    for (int color = 0; color < dec.colors && witness.is_null(); ++color) {
      std::fill(group.begin(), group.end(), -1);
      for (std::size_t ci = 0; ci < dec.clusters.size(); ++ci) {
        if (dec.clusters[ci].color != color) continue;
        for (Node v : dec.clusters[ci].members) group[v] = static_cast<int>(ci);
      }
      if (auto w = close_groups(g, group, bounds.k)) {
        witness = *w;
        witness["color"] = color;
      }
    }
    report.add("separation", witness.is_null(), witness);
  }

  // Steiner trees: rooted, over graph edges, terminals = members, radius bound.
  json tree_witness = nullptr;
  json radius_witness = nullptr;
  json diameter_witness = nullptr;
  std::uint64_t max_radius = 0;
  std::vector<std::int64_t> parent(n, -1);
  std::vector<int> depth(n, -1);
  std::vector<char> in_tree(n, 0);
  for (std::size_t ci = 0; ci < dec.clusters.size(); ++ci) {
    const auto& c = dec.clusters[ci];
    const auto& t = c.tree;
    std::vector<Node> touched;
    auto fail = [&](const char* reason, json extra) {
      if (tree_witness.is_null()) {
        tree_witness = {{"reason", reason}, {"cluster", ci}};
        tree_witness.update(extra);
      }
    };
    if (t.root >= n) {
      fail("root out of range", {{"root", t.root}});
      continue;
    }
    in_tree[t.root] = 1;
    touched.push_back(t.root);
    bool valid = true;
    for (const auto& [child, par] : t.parent) {
      if (child >= n || par >= n || child == t.root || in_tree[child] || !g.has_edge(child, par)) {
        fail("bad parent entry", {{"child", child}, {"parent", par}});
        valid = false;
        break;
      }
      in_tree[child] = 1;
      parent[child] = par;
      touched.push_back(child);
    }
    if (valid) {
      for (const auto& [child, par] : t.parent) {
        if (!in_tree[par]) {
          fail("parent outside tree", {{"child", child}, {"parent", par}});
          valid = false;
          break;
        }
      }
    }
    int radius = 0;
    if (valid) {
      depth[t.root] = 0;
      for (Node v : touched) {
        std::vector<Node> chain;
        Node x = v;
        while (depth[x] < 0 && chain.size() <= touched.size()) {
          chain.push_back(x);
          x = static_cast<Node>(parent[x]);
        }
        if (depth[x] < 0) {
          fail("cycle", {{"node", v}});
          valid = false;
          break;
        }
        int d = depth[x];
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) depth[*it] = ++d;
        radius = std::max(radius, depth[v]);
      }
    }
    if (valid) {
      std::vector<Node> terms = t.terminals;
      std::vector<Node> mem = c.members;
      std::sort(terms.begin(), terms.end());
      std::sort(mem.begin(), mem.end());
      if (terms != mem) {
        fail("terminals differ from members", {});
        valid = false;
      }
      for (Node v : mem) {
        if (valid && !in_tree[v]) {
          fail("member not in tree", {{"node", v}});
          valid = false;
        }
      }
    }
    if (valid) {
      max_radius = std::max<std::uint64_t>(max_radius, static_cast<std::uint64_t>(radius));
      if (bounds.radius && static_cast<std::uint64_t>(radius) > *bounds.radius &&
          radius_witness.is_null()) {
        radius_witness = {{"cluster", ci}, {"radius", radius}, {"bound", *bounds.radius}};
      }
      // Members within `limit` of the root in G give weak diameter <= 2 limit.
      const std::uint64_t limit = bounds.radius ? std::min<std::uint64_t>(*bounds.radius, radius)
                                                : static_cast<std::uint64_t>(radius);
      const DistanceMap dist = bfs_distances(g, std::span<const Node>(&t.root, 1));
      for (Node v : c.members) {
        if ((dist[v] == kUnreachable || static_cast<std::uint64_t>(dist[v]) > limit) &&
            diameter_witness.is_null()) {
          diameter_witness = {{"cluster", ci}, {"node", v}, {"distance_from_root", dist[v]},
                              {"limit", limit}};
        }
      }
    }
    for (Node v : touched) {
      in_tree[v] = 0;
      parent[v] = -1;
      depth[v] = -1;
    }
  }
  report.add("steiner_trees", tree_witness.is_null(), tree_witness);
  report.add("tree_radius", radius_witness.is_null(), radius_witness);
  report.add("weak_diameter", diameter_witness.is_null(), diameter_witness);

  if (bounds.colors) {
    report.add("color_count", dec.colors <= *bounds.colors,
               {{"colors", dec.colors}, {"bound", *bounds.colors}});
  }

  if (bounds.congestion) {
    json witness = nullptr;
    for (int color = 0; color < dec.colors && witness.is_null(); ++color) {
      std::unordered_map<std::uint64_t, std::uint64_t> count;
      for (const auto& c : dec.clusters) {
        if (c.color != color) continue;
        for (const auto& [child, par] : c.tree.parent) {
          const std::uint64_t m = ++count[edge_key(child, par)];
          if (m > *bounds.congestion && witness.is_null()) {
            witness = {{"color", color}, {"edge", {child, par}}, {"trees", m},
                       {"bound", *bounds.congestion}};
          }
        }
      }
    }
    report.add("congestion", witness.is_null(), witness);
  }
  return report;
}

Report verify_strong(const Graph& g, std::span<const int> color_of, std::optional<int> diameter_bound,
                     std::optional<int> color_bound) {
  Report report;
  const std::size_t n = g.node_count();
  if (color_of.size() != n) {
    report.add("totality", false, {{"reason", "color_of has wrong length"}});
    return report;
  }
  int colors = 0;
  json total_witness = nullptr;
  for (Node v = 0; v < n; ++v) {
    if (color_of[v] < 0 && total_witness.is_null()) total_witness = {{"node", v}};
    colors = std::max(colors, color_of[v] + 1);
  }
  report.add("totality", total_witness.is_null(), total_witness);
  if (!total_witness.is_null()) return report;

  int max_diameter = 0;
  json diameter_witness = nullptr;
  std::vector<char> mask(n, 0);
  std::vector<char> visited(n, 0);
  for (Node s = 0; s < n; ++s) {
    if (visited[s]) continue;
    for (Node v = 0; v < n; ++v) mask[v] = color_of[v] == color_of[s];
    const DistanceMap reach = bfs_distances_within(g, std::span<const Node>(&s, 1), mask);
    std::vector<Node> component;
    for (Node v = 0; v < n; ++v) {
      if (reach[v] != kUnreachable) {
        component.push_back(v);
        visited[v] = 1;
      }
    }
    for (Node u : component) {
      const DistanceMap dist = bfs_distances_within(g, std::span<const Node>(&u, 1), mask);
      for (Node v : component) {
        if (dist[v] > max_diameter) max_diameter = dist[v];
        if (diameter_bound && dist[v] > *diameter_bound && diameter_witness.is_null()) {
          diameter_witness = {{"color", color_of[s]}, {"pair", {u, v}}, {"distance", dist[v]},
                              {"bound", *diameter_bound}};
        }
      }
    }
  }
  report.add("component_diameter", diameter_witness.is_null(), diameter_witness);
  if (color_bound) {
    report.add("color_count", colors <= *color_bound, {{"colors", colors}, {"bound", *color_bound}});
  }
  return report;
}

Report verify_mis(const Graph& g, std::span<const Node> members) {
  Report report;
  const std::size_t n = g.node_count();
  std::vector<char> in(n, 0);
  json range_witness = nullptr;
  for (Node v : members) {
    if (v >= n) {
      range_witness = {{"node", v}};
      break;
    }
    in[v] = 1;
  }
  report.add("in_range", range_witness.is_null(), range_witness);
  if (!range_witness.is_null()) return report;
  json indep = nullptr;
  json maximal = nullptr;
  for (Node v = 0; v < n; ++v) {
    bool covered = in[v];
    for (Node w : g.neighbors(v)) {
      if (in[v] && in[w] && indep.is_null()) indep = {{"edge", {std::min(v, w), std::max(v, w)}}};
      covered = covered || in[w];
    }
    if (!covered && maximal.is_null()) maximal = {{"node", v}};
  }
  report.add("independent", indep.is_null(), indep);
  report.add("maximal", maximal.is_null(), maximal);
  return report;
}

Report verify_coloring(const Graph& g, std::span<const std::int64_t> color,
                       const std::vector<std::vector<std::int64_t>>* lists) {
  Report report;
  const std::size_t n = g.node_count();
  if (color.size() != n) {
    report.add("totality", false, {{"reason", "one color per node required"}});
    return report;
  }
  json proper = nullptr;
  for (const auto& [u, v] : g.edges()) {
    if (color[u] == color[v]) {
      proper = {{"edge", {u, v}}, {"color", color[u]}};
      break;
    }
  }
  report.add("proper", proper.is_null(), proper);
  if (lists) {
    json in_list = nullptr;
    for (Node v = 0; v < n && in_list.is_null(); ++v) {
      const auto& l = v < lists->size() ? (*lists)[v] : std::vector<std::int64_t>{};
      if (std::find(l.begin(), l.end(), color[v]) == l.end()) {
        in_list = {{"node", v}, {"color", color[v]}};
      }
    }
    report.add("in_list", in_list.is_null(), in_list);
  }
  return report;
}

Report verify_ruling(const Graph& g, std::span<const Node> members, std::span<const Node> restrict_to,
                     int beta) {
  Report report;
  const std::size_t n = g.node_count();
  std::vector<char> inside(n, 0);
  for (Node v : restrict_to) {
    if (v < n) inside[v] = 1;
  }
  std::vector<char> in(n, 0);
  json subset = nullptr;
  for (Node v : members) {
    if (v >= n || !inside[v]) {
      subset = {{"node", v}};
      break;
    }
    in[v] = 1;
  }
  report.add("subset", subset.is_null(), subset);
  if (!subset.is_null()) return report;

  json indep = nullptr;
  for (Node v : members) {
    for (Node w : g.neighbors(v)) {
      if (in[w] && indep.is_null()) indep = {{"edge", {std::min(v, w), std::max(v, w)}}};
    }
  }
  report.add("non_adjacent", indep.is_null(), indep);

  const DistanceMap dist = bfs_distances_within(g, members, inside);
  json dom = nullptr;
  for (Node v : restrict_to) {
    if (v < n && (dist[v] == kUnreachable || dist[v] > beta)) {
      dom = {{"node", v}, {"distance", dist[v]}, {"bound", beta}};
      break;
    }
  }
  report.add("domination", dom.is_null(), dom);
  return report;
}

Report check_phase_invariants(const PhaseSnapshot& snap) {
  Report report;
  const Graph& g = *snap.graph;
  const ClusterState& st = *snap.state;
  const std::size_t n = g.node_count();
  const int suffix = snap.phase + 1;
  const NodeIdent mask = suffix >= 64 ? ~NodeIdent{0} : ((NodeIdent{1} << suffix) - 1);

  // Alive nodes grouped by label suffix; different groups must be > k apart.
  std::vector<int> group(n, -1);
  std::unordered_map<NodeIdent, int> index;
  for (Node v = 0; v < n; ++v) {
    if (!st.alive(v)) continue;
    const NodeIdent key = g.id(st.label[v]) & mask;
    auto [it, inserted] = index.try_emplace(key, static_cast<int>(index.size()));
    group[v] = it->second;
  }
  auto close = close_groups(g, group, snap.k);
  report.add("suffix_separation", !close.has_value(), close ? *close : json(nullptr));

  const DecompositionParams params = DecompositionParams::of(g);
  const std::uint64_t bound =
      static_cast<std::uint64_t>(suffix) * static_cast<std::uint64_t>(snap.k) * params.steps_per_phase;
  json radius_witness = nullptr;
  json terminal_witness = nullptr;
  std::vector<int> depth(n, -1);
  std::vector<std::int64_t> parent(n, -1);
  for (Node root = 0; root < n; ++root) {
    const auto edges = snap.forest->parent_edges(root);
    if (edges.empty()) continue;
    for (const auto& [child, par] : edges) parent[child] = par;
    depth[root] = 0;
    int radius = 0;
    for (const auto& [child, par] : edges) {
      std::vector<Node> chain;
      Node x = child;
      while (depth[x] < 0 && chain.size() <= edges.size()) {
        chain.push_back(x);
        x = static_cast<Node>(parent[x]);
      }
      int d = depth[x];
      for (auto it = chain.rbegin(); it != chain.rend(); ++it) depth[*it] = ++d;
      radius = std::max(radius, depth[child]);
    }
    if (static_cast<std::uint64_t>(radius) > bound && radius_witness.is_null()) {
      radius_witness = {{"root", root}, {"radius", radius}, {"bound", bound}};
    }
    for (const auto& [child, par] : edges) {
      depth[child] = -1;
      parent[child] = -1;
    }
    depth[root] = -1;
  }
  for (Node v = 0; v < n && terminal_witness.is_null(); ++v) {
    if (st.alive(v) && !snap.forest->contains(st.label[v], v)) {
      terminal_witness = {{"node", v}, {"label_root", st.label[v]}};
    }
  }
  report.add("tree_radius", radius_witness.is_null(), radius_witness);
  report.add("terminals_in_tree", terminal_witness.is_null(), terminal_witness);

  const auto two_b = 2ULL * static_cast<std::uint64_t>(params.id_bits);
  const bool survivors = two_b * snap.stats.alive_after >= (two_b - 1) * snap.stats.alive_before;
  report.add("survivors", survivors,
             {{"alive_before", snap.stats.alive_before}, {"alive_after", snap.stats.alive_after}});
  return report;
}

}  // namespace netdecomp
