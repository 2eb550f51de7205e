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

#include "netdecomp/alt_decomp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "netdecomp/decomp_weak.hpp"
#include "netdecomp/ruling_set.hpp"

namespace netdecomp {

using boost::multiprecision::cpp_int;

BallGrowthParams BallGrowthParams::defaults_for(const Graph& g) {
  BallGrowthParams p;
  p.t = 4ULL * static_cast<std::uint64_t>(g.id_bits());
  const double log_n = ceil_log2(g.node_count());
  const double denom = std::max(1.0, log_n > 0 ? std::log2(log_n) : 0.0);
  const int e = std::max(1, static_cast<int>(std::ceil(std::sqrt(log_n / denom))));
  p.eps = Rational(1, std::int64_t{1} << e);
  return p;
}

void BallGrowthParams::validate() const {
  if (t < 2) throw std::invalid_argument("t must be >= 2");
  if (eps <= 0 || eps >= 1) throw std::invalid_argument("eps must lie in (0, 1)");
}

int floor_log_inv(const Rational& eps, std::size_t n) {
  const cpp_int num = eps.numerator();
  const cpp_int den = eps.denominator();
  cpp_int lhs = 1;  // den^j
  cpp_int rhs = n;  // n * num^j
  int j = 0;
  while (lhs * den <= rhs * num) {
    lhs *= den;
    rhs *= num;
    ++j;
  }
  return j;
}

int ceil_log_inv(const Rational& eps, std::size_t n) {
  const cpp_int num = eps.numerator();
  const cpp_int den = eps.denominator();
  cpp_int lhs = 1;
  cpp_int rhs = n;
  int j = 0;
  while (lhs < rhs) {
    lhs *= den;
    rhs *= num;
    ++j;
  }
  return j;
}

namespace {

// BFS tree of B(center, radius) with the smallest-index parent per node.
std::vector<std::pair<Node, Node>> ball_tree(const Graph& g, Node center, std::uint64_t radius,
                                             std::vector<Node>& ball, int& depth) {
  std::vector<std::pair<Node, Node>> parent;
  DistanceMap dist = bfs_distances(g, std::span<const Node>(&center, 1));
  ball.clear();
  depth = 0;
  for (Node v = 0; v < g.node_count(); ++v) {
    if (dist[v] == kUnreachable || static_cast<std::uint64_t>(dist[v]) > radius) continue;
    ball.push_back(v);
    depth = std::max(depth, dist[v]);
    if (v == center) continue;
    for (Node w : g.neighbors(v)) {
      if (dist[w] == dist[v] - 1) {
        parent.emplace_back(v, w);
        break;
      }
    }
  }
  return parent;
}

}  // namespace

PartialColoring rapid_ball_growing(const Graph& g, const BallGrowthParams& params,
                                   RoundLedger ledger) {
  params.validate();
  const std::size_t n = g.node_count();
  PartialColoring out;
  out.params = params;
  out.index_of.assign(n, 0);
  out.radius_of.assign(n, 1);
  out.color_of.assign(n, -1);

  const cpp_int num = params.eps.numerator();
  const cpp_int den = params.eps.denominator();
  std::uint64_t gather = 0;
  std::vector<std::size_t> within;
  for (Node u = 0; u < n; ++u) {
    DistanceMap dist = bfs_distances(g, std::span<const Node>(&u, 1));
    within.assign(n + 1, 0);
    for (Distance d : dist) {
      if (d != kUnreachable) ++within[static_cast<std::size_t>(d)];
    }
    for (std::size_t d = 1; d <= n; ++d) within[d] += within[d - 1];
    auto ball_size = [&](std::uint64_t r) { return within[std::min<std::uint64_t>(r, n)]; };
    int i = 0;
    std::uint64_t r = 1;
    for (;;) {
      const std::uint64_t next = std::min<std::uint64_t>(r * params.t, n);
      if (cpp_int(ball_size(r)) * den >= num * cpp_int(ball_size(next))) {
        gather = std::max(gather, next);
        break;
      }
      r = next;
      ++i;
    }
    out.index_of[u] = i;
    out.radius_of[u] = r;
    out.max_index = std::max(out.max_index, i);
  }
  ledger.add_rounds(gather);

  // Per index class: ruling set of the graph joining class members within 3 t^i.
  std::vector<std::vector<Node>> centers(static_cast<std::size_t>(out.max_index) + 1);
  std::vector<std::uint64_t> class_radius(centers.size(), 0);
  for (int i = 0; i <= out.max_index; ++i) {
    std::vector<Node> members;
    for (Node u = 0; u < n; ++u) {
      if (out.index_of[u] == i) members.push_back(u);
    }
    if (members.empty()) continue;
    const std::uint64_t r = out.radius_of[members.front()];
    class_radius[i] = r;
    std::vector<char> all(n, 1);
    std::vector<char> in_class(n, 0);
    for (Node u : members) in_class[u] = 1;
    std::vector<std::pair<Node, Node>> edges;
    const auto reach = static_cast<Distance>(std::min<std::uint64_t>(3 * r, n));
    for (Node u : members) {
      DistanceMap dist = bfs_distances_within(g, std::span<const Node>(&u, 1), all, reach);
      for (Node v = u + 1; v < n; ++v) {
        if (in_class[v] && dist[v] != kUnreachable) edges.emplace_back(u, v);
      }
    }
    const Graph gi = Graph::from_edge_list(n, edges, g.ids());
    RulingSetResult rs = ruling_set(gi, members, RoundLedger::local());
    RoundLedger sub = ledger.congest() ? RoundLedger::congest(ledger.budget_bits) : RoundLedger::local();
    sub.absorb(rs.ledger);
    ledger.absorb(sub, static_cast<std::uint64_t>(reach));
    centers[i] = std::move(rs.members);
  }

  // A node takes the smallest index whose ruling-set ball covers it.
  std::vector<int> index_color(centers.size(), -1);
  std::vector<int> raw(n, -1);
  for (int i = 0; i <= out.max_index; ++i) {
    for (Node c : centers[i]) {
      DistanceMap dist = bfs_distances(g, std::span<const Node>(&c, 1));
      for (Node v = 0; v < n; ++v) {
        if (raw[v] == -1 && dist[v] != kUnreachable &&
            static_cast<std::uint64_t>(dist[v]) <= class_radius[i]) {
          raw[v] = i;
        }
      }
    }
  }
  for (Node v = 0; v < n; ++v) {
    if (raw[v] != -1 && index_color[raw[v]] == -1) index_color[raw[v]] = 0;
  }
  for (auto& c : index_color) {
    if (c != -1) c = out.colors++;
  }
  for (Node v = 0; v < n; ++v) {
    if (raw[v] == -1) continue;
    out.color_of[v] = index_color[raw[v]];
    out.colored.push_back(v);
  }

  std::uint64_t max_center_radius = 0;
  for (int i = 0; i <= out.max_index; ++i) {
    std::vector<Node> sorted = centers[i];
    std::sort(sorted.begin(), sorted.end(), [&](Node a, Node b) { return g.id(a) < g.id(b); });
    for (Node c : sorted) {
      Cluster cl;
      std::vector<Node> ball;
      int depth = 0;
      cl.tree.parent = ball_tree(g, c, class_radius[i], ball, depth);
      for (Node v : ball) {
        if (raw[v] == i) cl.members.push_back(v);
      }
      if (cl.members.empty()) continue;
      cl.color = index_color[i];
      cl.label = g.id(c);
      cl.tree.root = c;
      cl.tree.terminals = cl.members;
      cl.tree.radius = depth;
      max_center_radius = std::max(max_center_radius, class_radius[i]);
      out.clusters.push_back(std::move(cl));
    }
  }
  std::stable_sort(out.clusters.begin(), out.clusters.end(),
                   [](const Cluster& a, const Cluster& b) { return a.color < b.color; });
  out.max_radius = max_center_radius;
  ledger.add_rounds(2 * max_center_radius + 1);

  out.index_bound = ceil_log_inv(params.eps, n);
  // ceil(eps n / (floor(log_{1/eps} n) + 1)) with eps = p/q.
  const auto p = static_cast<std::uint64_t>(params.eps.numerator());
  const auto q = static_cast<std::uint64_t>(params.eps.denominator());
  const std::uint64_t denom = q * static_cast<std::uint64_t>(floor_log_inv(params.eps, n) + 1);
  out.covered_bound = static_cast<std::size_t>((p * n + denom - 1) / denom);
  out.ledger = ledger;
  return out;
}

AltDecomposition full_alt_decomposition(const Graph& g, const BallGrowthParams& params,
                                        RoundLedger ledger) {
  params.validate();
  AltDecomposition out;
  out.params = params;
  WeakDecomposition& dec = out.decomposition;
  dec.algorithm = "alt";
  dec.color_of.assign(g.node_count(), -1);
  std::vector<Node> remaining(g.node_count());
  for (Node v = 0; v < g.node_count(); ++v) remaining[v] = v;

  while (!remaining.empty()) {
    auto [sub, to_host] = induced_subgraph(g, remaining);
    RoundLedger fresh = ledger.congest() ? RoundLedger::congest(ledger.budget_bits) : RoundLedger::local();
    PartialColoring part = rapid_ball_growing(sub, params, fresh);
    if (part.colored.empty()) throw std::logic_error("ball growing covered no node");
    ledger.absorb(part.ledger);
    out.calls.push_back({sub.node_count(), part.colored.size(), part.covered_bound, part.max_index,
                         part.index_bound});
    out.max_radius = std::max(out.max_radius, part.max_radius);

    const int offset = dec.colors;
    for (auto& cl : part.clusters) {
      for (auto& v : cl.members) v = to_host[v];
      for (auto& v : cl.tree.terminals) v = to_host[v];
      for (auto& [child, parent] : cl.tree.parent) {
        child = to_host[child];
        parent = to_host[parent];
      }
      std::sort(cl.tree.parent.begin(), cl.tree.parent.end());
      cl.tree.root = to_host[cl.tree.root];
      cl.color += offset;
      dec.clusters.push_back(std::move(cl));
    }
    std::vector<Node> next;
    for (Node s = 0; s < sub.node_count(); ++s) {
      if (part.color_of[s] == -1) {
        next.push_back(to_host[s]);
      } else {
        dec.color_of[to_host[s]] = part.color_of[s] + offset;
      }
    }
    for (int c = 0; c < part.colors; ++c) {
      ColorRun run;
      run.attempted = sub.node_count();
      for (Node s = 0; s < sub.node_count(); ++s) run.clustered += part.color_of[s] == c ? 1 : 0;
      dec.runs.push_back(run);
    }
    dec.colors += part.colors;
    remaining = std::move(next);
  }
  dec.ledger = ledger;
  return out;
}

int max_weak_diameter(const Graph& g, const WeakDecomposition& dec) {
  int best = 0;
  for (const auto& cl : dec.clusters) {
    for (Node s : cl.members) {
      DistanceMap dist = bfs_distances(g, std::span<const Node>(&s, 1));
      for (Node v : cl.members) {
        if (dist[v] == kUnreachable) return std::numeric_limits<int>::max();
        best = std::max(best, dist[v]);
      }
    }
  }
  return best;
}

ComparisonReport compare_decompositions(const Graph& g) {
  ComparisonReport report;
  report.nodes = g.node_count();
  const WeakDecomposition weak = weak_decomposition(g);
  report.weak = {"weak", weak.colors, max_weak_diameter(g, weak), weak.ledger.rounds};
  const AltDecomposition alt = full_alt_decomposition(g, BallGrowthParams::defaults_for(g));
  report.alt = {"alt", alt.decomposition.colors, max_weak_diameter(g, alt.decomposition),
                alt.decomposition.ledger.rounds};
  return report;
}

}  // namespace netdecomp
