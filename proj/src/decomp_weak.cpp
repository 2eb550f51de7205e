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

#include "netdecomp/decomp_weak.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>

namespace netdecomp {

OneColorClustering::OneColorClustering(const Graph& g, std::span<const Node> nodes,
                                       RoundLedger& ledger, int k)
    : g_(g), params_(DecompositionParams::of(g)), k_(k), ledger_(ledger), forest_(g.node_count()) {
  if (nodes.empty()) throw std::invalid_argument("one-color clustering needs a non-empty node set");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const std::size_t n = g.node_count();
  state_.status.assign(n, NodeStatus::kOutside);
  state_.label.resize(n);
  size_.assign(n, 0);
  stopped_.assign(n, 0);
  growth_.assign(n, 0);
  pending_.assign(n, 0);
  for (Node v = 0; v < n; ++v) state_.label[v] = v;
  for (Node v : nodes) {
    if (v >= n) throw std::invalid_argument("node index out of range");
    if (state_.status[v] == NodeStatus::kAlive) throw std::invalid_argument("duplicate node in set");
    state_.status[v] = NodeStatus::kAlive;
    size_[v] = 1;
    forest_.add_root(v);
  }
  attempted_ = nodes.size();
}

void OneColorClustering::begin_phase(int phase) {
  if (phase < 0 || phase >= params_.id_bits) throw std::out_of_range("phase out of range");
  state_.phase = phase;
  state_.step = 0;
  for (Node r : blue_roots_) {
    stopped_[r] = 0;
    growth_[r] = 0;
  }
  // A root may have left its own cluster, so collect labels held by blue members.
  for (Node v = 0; v < g_.node_count(); ++v) {
    if (state_.alive(v) && is_blue(v)) pending_[state_.label[v]] = 1;
  }
  blue_roots_.clear();
  for (Node r = 0; r < g_.node_count(); ++r) {
    if (pending_[r]) {
      blue_roots_.push_back(r);
      pending_[r] = 0;
      stopped_[r] = 0;
      growth_[r] = 0;
    }
  }
  edge_additions_.clear();
}

PhaseStats OneColorClustering::run_phase(int phase) {
  begin_phase(phase);
  PhaseStats stats;
  stats.phase = phase;
  for (Node v = 0; v < g_.node_count(); ++v) stats.alive_before += state_.alive(v) ? 1 : 0;
  while (run_step()) {
  }
  for (Node v = 0; v < g_.node_count(); ++v) {
    stats.alive_after += state_.alive(v) ? 1 : 0;
    stats.max_tree_radius = std::max(stats.max_tree_radius, forest_.radius(v));
  }
  stats.deaths = stats.alive_before - stats.alive_after;
  stats.steps = static_cast<std::uint64_t>(state_.step);
  for (Node r : blue_roots_) stats.max_growth_steps = std::max(stats.max_growth_steps, growth_[r]);
  for (const auto& [edge, count] : edge_additions_) {
    stats.max_edge_additions = std::max(stats.max_edge_additions, count);
  }
  phases_.push_back(stats);
  return stats;
}

OneColorResult OneColorClustering::run(const PhaseObserver& observer) {
  for (int i = 0; i < params_.id_bits; ++i) {
    PhaseStats stats = run_phase(i);
    if (observer) observer(PhaseSnapshot{&g_, i, k_, &state_, &forest_, stats});
  }
  return result();
}

OneColorResult OneColorClustering::result() const {
  OneColorResult out = collect_one_color(g_, state_, forest_, attempted_);
  out.phases = phases_;
  out.anchors = anchors_;
  return out;
}

std::vector<OneColorClustering::Verdict> OneColorClustering::decide(
    const std::vector<Proposal>& proposals) {
  std::vector<Verdict> verdicts(proposals.size(), Verdict::kDenied);
  for (std::size_t j = 0; j < proposals.size(); ++j) {
    if (stopped_[proposals[j].root]) {
      verdicts[j] = Verdict::kRefused;
    } else {
      ++pending_[proposals[j].root];
    }
  }
  const std::uint64_t two_b = 2ULL * static_cast<std::uint64_t>(params_.id_bits);
  for (Node r : blue_roots_) {
    if (stopped_[r]) continue;
    if (pending_[r] * two_b > size_[r]) {
      ++growth_[r];
    } else {
      stopped_[r] = 1;
    }
  }
  for (std::size_t j = 0; j < proposals.size(); ++j) {
    if (verdicts[j] == Verdict::kRefused) continue;
    verdicts[j] = stopped_[proposals[j].root] ? Verdict::kDenied : Verdict::kAccepted;
  }
  for (const auto& p : proposals) pending_[p.root] = 0;
  return verdicts;
}

void OneColorClustering::attach_edge(Node root, Node v, Node parent, Distance level, bool relay) {
  forest_.attach(root, v, parent);
  const Node a = std::min(v, parent);
  const Node b = std::max(v, parent);
  ++edge_additions_[(static_cast<std::uint64_t>(a) << 32) | b];
  if (k_ > 1) anchors_.push_back({state_.phase, state_.step, v, root, parent, level, relay});
}

void OneColorClustering::join(Node v, Node root, Node via, Distance level) {
  --size_[state_.label[v]];
  state_.label[v] = root;
  ++size_[root];
  attach_edge(root, v, via, level, false);
}

void OneColorClustering::charge_step() {
  int radius = 0;
  std::vector<Node> active;
  for (Node r : blue_roots_) {
    if (stopped_[r]) continue;
    radius = std::max(radius, forest_.radius(r));
    active.push_back(r);
  }
  std::size_t mult = 1;
  if (ledger_.congest()) mult = std::max<std::size_t>(1, forest_.max_edge_multiplicity(active));
  const auto bits = static_cast<std::uint64_t>(params_.id_bits + bit_length(g_.node_count()));
  charge_cluster_op(ledger_, static_cast<std::uint64_t>(radius), mult, bits);
}

WeakClustering::WeakClustering(const Graph& g, std::span<const Node> nodes, RoundLedger& ledger)
    : OneColorClustering(g, nodes, ledger, 1) {}

bool WeakClustering::run_step() {
  std::vector<Proposal> proposals;
  for (Node v = 0; v < g_.node_count(); ++v) {
    if (!state_.alive(v) || is_blue(v)) continue;
    std::optional<std::pair<NodeIdent, Node>> best;
    for (Node w : g_.neighbors(v)) {
      if (!state_.alive(w) || !is_blue(w) || stopped_[state_.label[w]]) continue;
      std::pair<NodeIdent, Node> key{g_.id(state_.label[w]), w};
      if (!best || key < *best) best = key;
    }
    if (best) proposals.push_back({v, state_.label[best->second], best->second, 1});
  }
  if (proposals.empty()) return false;
  if (static_cast<std::uint64_t>(state_.step) >= params_.steps_per_phase) {
    throw std::logic_error("blue-red contact survived all steps of phase " +
                           std::to_string(state_.phase));
  }
  charge_step();
  const auto verdicts = decide(proposals);
  for (std::size_t j = 0; j < proposals.size(); ++j) {
    const auto& p = proposals[j];
    if (verdicts[j] == Verdict::kAccepted) {
      join(p.proposer, p.root, p.via, p.level);
    } else {
      state_.status[p.proposer] = NodeStatus::kDead;
    }
  }
  ++state_.step;
  return true;
}

OneColorResult cluster_one_color(const Graph& g, std::span<const Node> nodes, RoundLedger& ledger,
                                 const PhaseObserver& observer) {
  WeakClustering engine(g, nodes, ledger);
  return engine.run(observer);
}

WeakDecomposition weak_decomposition(const Graph& g, RoundLedger ledger,
                                     const PhaseObserver& observer) {
  WeakDecomposition dec;
  dec.algorithm = "weak";
  dec.color_of.assign(g.node_count(), -1);
  std::vector<Node> remaining(g.node_count());
  for (Node v = 0; v < g.node_count(); ++v) remaining[v] = v;
  while (!remaining.empty()) {
    OneColorResult res = cluster_one_color(g, remaining, ledger, observer);
    if (res.clustered.empty()) throw std::logic_error("one-color clustering made no progress");
    remaining = res.dead;
    append_color(dec, std::move(res));
  }
  dec.ledger = ledger;
  return dec;
}

}  // namespace netdecomp
