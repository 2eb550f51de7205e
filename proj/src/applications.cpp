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

#include "netdecomp/applications.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "netdecomp/decomp_power.hpp"
#include "netdecomp/decomp_weak.hpp"

namespace netdecomp {

namespace {

// Gather/scatter over the trees of one color, all clusters in parallel.
void charge_color(RoundLedger& ledger, const WeakDecomposition& dec, int color,
                  std::uint64_t extra_radius, std::uint64_t bits) {
  int radius = 0;
  for (const auto& c : dec.clusters) {
    if (c.color == color) radius = std::max(radius, c.tree.radius);
  }
  charge_cluster_op(ledger, static_cast<std::uint64_t>(radius) + extra_radius, 1, bits);
}

std::vector<Node> by_id(const Graph& g, std::vector<Node> nodes) {
  std::sort(nodes.begin(), nodes.end(), [&](Node a, Node b) { return g.id(a) < g.id(b); });
  return nodes;
}

}  // namespace

MisResult mis(const Graph& g, RoundLedger ledger) {
  WeakDecomposition dec = weak_decomposition(g, ledger);
  MisResult out;
  out.ledger = dec.ledger;
  std::vector<char> in(g.node_count(), 0);
  for (int color = 0; color < dec.colors; ++color) {
    for (const auto& c : dec.clusters) {
      if (c.color != color) continue;
      for (Node v : by_id(g, c.members)) {
        bool free = true;
        for (Node w : g.neighbors(v)) free = free && !in[w];
        if (free) in[v] = 1;
      }
    }
    charge_color(out.ledger, dec, color, 1, static_cast<std::uint64_t>(g.id_bits()));
  }
  for (Node v = 0; v < g.node_count(); ++v) {
    if (in[v]) out.members.push_back(v);
  }
  return out;
}

ColoringResult list_coloring(const Graph& g, const std::vector<std::vector<ColorValue>>& lists,
                             RoundLedger ledger) {
  const std::size_t n = g.node_count();
  if (lists.size() != n) throw std::invalid_argument("list_coloring: one list per node required");
  std::vector<std::vector<ColorValue>> sorted(n);
  for (Node v = 0; v < n; ++v) {
    sorted[v] = lists[v];
    std::sort(sorted[v].begin(), sorted[v].end());
    sorted[v].erase(std::unique(sorted[v].begin(), sorted[v].end()), sorted[v].end());
    if (sorted[v].size() < g.degree(v) + 1) {
      throw std::invalid_argument("list_coloring: node " + std::to_string(v) + " has " +
                                  std::to_string(sorted[v].size()) + " distinct colors, needs " +
                                  std::to_string(g.degree(v) + 1));
    }
  }
  WeakDecomposition dec = weak_decomposition(g, ledger);
  ColoringResult out;
  out.ledger = dec.ledger;
  out.color.assign(n, 0);
  std::vector<char> done(n, 0);
  std::vector<ColorValue> taken;
  for (int color = 0; color < dec.colors; ++color) {
    for (const auto& c : dec.clusters) {
      if (c.color != color) continue;
      for (Node v : by_id(g, c.members)) {
        taken.clear();
        for (Node w : g.neighbors(v)) {
          if (done[w]) taken.push_back(out.color[w]);
        }
        std::sort(taken.begin(), taken.end());
        for (ColorValue x : sorted[v]) {
          if (!std::binary_search(taken.begin(), taken.end(), x)) {
            out.color[v] = x;
            break;
          }
        }
        done[v] = 1;
      }
    }
    charge_color(out.ledger, dec, color, 1, 64);
  }
  return out;
}

ColoringResult delta_plus_one_coloring(const Graph& g, RoundLedger ledger) {
  std::vector<ColorValue> palette(g.max_degree() + 1);
  std::iota(palette.begin(), palette.end(), ColorValue{0});
  return list_coloring(g, std::vector<std::vector<ColorValue>>(g.node_count(), palette), ledger);
}

Rational CutSplitProblem::flag_cost(Node v, const BitAssignment& a) const {
  std::int64_t count = 0;
  for (Node u : g_.neighbors(v)) {
    if (g_.id(v) > g_.id(u)) continue;
    if (!a.fixed(v, 0) || !a.fixed(u, 0)) throw std::logic_error("flag_cost needs fixed bits");
    count += a.get(v, 0) == a.get(u, 0) ? 1 : 0;
  }
  return Rational(count);
}

Rational CutSplitProblem::conditional_expectation(Node v, const BitAssignment& a) const {
  Rational sum(0);
  for (Node u : g_.neighbors(v)) {
    if (g_.id(v) > g_.id(u)) continue;
    if (a.fixed(v, 0) && a.fixed(u, 0)) {
      sum += a.get(v, 0) == a.get(u, 0) ? 1 : 0;
    } else {
      sum += Rational(1, 2);
    }
  }
  return sum;
}

std::unique_ptr<LocalProblem> cut_split_problem(const Graph& g) {
  return std::make_unique<CutSplitProblem>(g);
}

DerandomizeResult derandomize(const Graph& g, const LocalProblem& problem,
                              const DerandomizeOptions& options, RoundLedger ledger) {
  const std::size_t n = g.node_count();
  const int bits = problem.bits_per_node();
  const int radius = problem.radius();
  if (bits < 1) throw std::invalid_argument("bits_per_node must be positive");
  if (radius < 0) throw std::invalid_argument("problem radius must be non-negative");

  std::mt19937_64 rng(options.spot_seed);
  for (int s = 0; s < options.spot_checks; ++s) {
    BitAssignment a(n, bits);
    for (Node v = 0; v < n; ++v) {
      for (int j = 0; j < bits; ++j) a.set(v, j, static_cast<std::int8_t>(rng() & 1U));
    }
    for (Node v = 0; v < n; ++v) {
      if (problem.conditional_expectation(v, a) != problem.flag_cost(v, a)) {
        throw std::logic_error("conditional expectation disagrees with flag cost at node " +
                               std::to_string(v));
      }
    }
  }

  WeakDecomposition dec = power_decomposition(g, 2 * radius + 1, ledger);
  DerandomizeResult out;
  out.ledger = dec.ledger;
  BitAssignment a(n, bits);

  std::vector<Rational> current(n);
  Rational total(0);
  for (Node v = 0; v < n; ++v) {
    current[v] = problem.conditional_expectation(v, a);
    total += current[v];
  }
  out.initial_expectation = total;

  std::vector<char> all(n, 1);
  std::vector<Node> affected;
  for (int color = 0; color < dec.colors; ++color) {
    std::vector<const Cluster*> order;
    for (const auto& c : dec.clusters) {
      if (c.color == color) order.push_back(&c);
    }
    if (options.cluster_order_seed) {
      std::mt19937_64 shuffle_rng(*options.cluster_order_seed + static_cast<std::uint64_t>(color));
      std::shuffle(order.begin(), order.end(), shuffle_rng);
    }
    for (const Cluster* c : order) {
      for (Node u : by_id(g, c->members)) {
        const DistanceMap dist = bfs_distances_within(g, std::span<const Node>(&u, 1), all, radius);
        affected.clear();
        for (Node v = 0; v < n; ++v) {
          if (dist[v] != kUnreachable) affected.push_back(v);
        }
        for (int j = 0; j < bits; ++j) {
          Rational before(0);
          for (Node v : affected) before += current[v];
          Rational cost[2];
          for (int value = 0; value < 2; ++value) {
            a.set(u, j, static_cast<std::int8_t>(value));
            cost[value] = 0;
            for (Node v : affected) cost[value] += problem.conditional_expectation(v, a);
          }
          const int pick = cost[1] < cost[0] ? 1 : 0;
          a.set(u, j, static_cast<std::int8_t>(pick));
          if (cost[pick] > before) {
            throw std::logic_error("conditional expectation increased at node " + std::to_string(u));
          }
          for (Node v : affected) current[v] = problem.conditional_expectation(v, a);
          total += cost[pick] - before;
          ++out.fixings;
        }
      }
    }
    charge_color(out.ledger, dec, color, static_cast<std::uint64_t>(radius),
                 static_cast<std::uint64_t>(bits) + static_cast<std::uint64_t>(g.id_bits()));
  }

  out.final_cost = 0;
  for (Node v = 0; v < n; ++v) {
    const Rational f = problem.flag_cost(v, a);
    if (f != problem.conditional_expectation(v, a)) {
      throw std::logic_error("conditional expectation disagrees with flag cost at node " +
                             std::to_string(v));
    }
    out.final_cost += f;
  }
  if (out.final_cost != total) throw std::logic_error("tracked expectation drifted from final cost");
  out.bits = std::move(a);
  return out;
}

}  // namespace netdecomp
