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

#include "netdecomp/decomp_strong.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "netdecomp/decomp_weak.hpp"

namespace netdecomp {

BallCarve ball_carve(const Graph& g, std::span<const char> inside, Node start) {
  if (start >= g.node_count() || !inside[start]) {
    throw std::invalid_argument("ball_carve: start node not in the subgraph");
  }
  std::vector<char> seen(g.node_count(), 0);
  BallCarve out;
  out.ball.push_back(start);
  seen[start] = 1;
  std::vector<Node> layer{start};
  std::vector<Node> next;
  for (;;) {
    next.clear();
    for (Node u : layer) {
      for (Node w : g.neighbors(u)) {
        if (inside[w] && !seen[w]) {
          seen[w] = 1;
          next.push_back(w);
        }
      }
    }
    if (next.size() < out.ball.size()) break;
    out.ball.insert(out.ball.end(), next.begin(), next.end());
    layer.swap(next);
    ++out.radius;
  }
  out.boundary = next;
  std::sort(out.ball.begin(), out.ball.end());
  std::sort(out.boundary.begin(), out.boundary.end());
  return out;
}

StrongDecomposition strong_decomposition(const Graph& g, RoundLedger ledger) {
  const std::size_t n = g.node_count();
  const int log_n = ceil_log2(n);
  StrongDecomposition dec;
  dec.helper_k = std::max(1, 10 * log_n);
  dec.color_of.assign(n, -1);

  const Graph helper_graph = power(g, dec.helper_k);
  WeakDecomposition helper = weak_decomposition(helper_graph, ledger.congest()
                                                                  ? RoundLedger::congest(ledger.budget_bits)
                                                                  : RoundLedger::local());
  ledger.absorb(helper.ledger, static_cast<std::uint64_t>(dec.helper_k));
  dec.helper_colors = helper.colors;

  std::vector<int> stage_radius(static_cast<std::size_t>(helper.colors), 0);
  for (const auto& c : helper.clusters) {
    stage_radius[c.color] = std::max(stage_radius[c.color], c.tree.radius);
  }

  std::vector<char> remaining(n, 1);
  std::vector<char> inside(n, 0);
  std::size_t left = n;
  while (left > 0) {
    const int color = dec.colors++;
    std::vector<char> dead(n, 0);
    std::vector<char> taken(n, 0);
    StrongColorRun run;
    for (Node v = 0; v < n; ++v) inside[v] = remaining[v];

    int current_stage = -1;
    for (const auto& hc : helper.clusters) {
      if (hc.color != current_stage) {
        current_stage = hc.color;
        const auto r = static_cast<std::uint64_t>(dec.helper_k) * stage_radius[current_stage] + log_n;
        ledger.add_rounds(2 * r + 1);
      }
      for (;;) {
        std::optional<Node> start;
        for (Node v : hc.members) {
          if (inside[v] && (!start || g.id(v) < g.id(*start))) start = v;
        }
        if (!start) break;
        BallCarve carved = ball_carve(g, inside, *start);
        for (Node v : carved.ball) {
          taken[v] = 1;
          inside[v] = 0;
          dec.color_of[v] = color;
        }
        for (Node v : carved.boundary) {
          dead[v] = 1;
          inside[v] = 0;
        }
        run.clustered += carved.ball.size();
        run.died += carved.boundary.size();
        dec.clusters.push_back({color, std::move(carved.ball), carved.radius, *start});
      }
    }
    for (Node v = 0; v < n; ++v) {
      if (taken[v]) {
        remaining[v] = 0;
        --left;
      }
    }
    if (run.clustered == 0) throw std::logic_error("strong decomposition made no progress");
    dec.runs.push_back(run);
  }
  dec.ledger = ledger;
  return dec;
}

}  // namespace netdecomp
