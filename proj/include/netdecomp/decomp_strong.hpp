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

#ifndef NETDECOMP_DECOMP_STRONG_HPP_
#define NETDECOMP_DECOMP_STRONG_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "netdecomp/graph.hpp"
#include "netdecomp/sync_engine.hpp"

namespace netdecomp {

struct StrongCluster {
  int color = 0;
  std::vector<Node> members;  // ascending
  int radius = 0;             // carving radius around `center`
  Node center = 0;
};

struct StrongColorRun {
  std::size_t clustered = 0;
  std::size_t died = 0;
};

/// Strong-diameter decomposition: each cluster is a connected component of its color class.
struct StrongDecomposition {
  int colors = 0;
  std::vector<int> color_of;
  std::vector<StrongCluster> clusters;  // by color, then carving order
  std::vector<StrongColorRun> runs;
  int helper_k = 1;        // hop distance of the helper power graph
  int helper_colors = 0;
  RoundLedger ledger;
};

struct BallCarve {
  std::vector<Node> ball;      // ascending
  std::vector<Node> boundary;  // ascending; nodes of `inside` adjacent to the ball
  int radius = 0;
};

/// Grows B(start, r) inside the masked subgraph for r = 0, 1, ... and stops
/// at the first r whose outer boundary is smaller than the ball.
BallCarve ball_carve(const Graph& g, std::span<const char> inside, Node start);

/// Strong decomposition via ball carving inside the clusters of a weak
/// decomposition of G^{10 ceil(log2 n)}.
StrongDecomposition strong_decomposition(const Graph& g, RoundLedger ledger = RoundLedger::local());

}  // namespace netdecomp

#endif  // NETDECOMP_DECOMP_STRONG_HPP_
