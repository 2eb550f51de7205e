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

#ifndef NETDECOMP_ALT_DECOMP_HPP_
#define NETDECOMP_ALT_DECOMP_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "netdecomp/cluster_state.hpp"
#include "netdecomp/graph.hpp"
#include "netdecomp/sync_engine.hpp"

namespace netdecomp {

using Rational = boost::rational<std::int64_t>;

/// Growth parameters: radii are powers of `t`, `eps` is the stopping ratio.
struct BallGrowthParams {
  std::uint64_t t = 2;
  Rational eps{1, 2};

  /// t = 4b and eps = 2^-max(1, ceil(sqrt(L / max(1, log2 L)))), L = ceil(log2 n).
  static BallGrowthParams defaults_for(const Graph& g);
  void validate() const;
};

/// floor(log_{1/eps} n) and ceil(log_{1/eps} n).
int floor_log_inv(const Rational& eps, std::size_t n);
int ceil_log_inv(const Rational& eps, std::size_t n);

/// Output of one ball-growing round; covers only part of the graph.
struct PartialColoring {
  BallGrowthParams params;
  std::vector<int> index_of;                 // stopping index i(u)
  std::vector<std::uint64_t> radius_of;      // t^i(u), capped at n
  std::vector<int> color_of;                 // -1 when uncovered; colors compacted
  int colors = 0;
  std::vector<Cluster> clusters;             // by color, then center id
  std::vector<Node> colored;                 // ascending
  std::size_t covered_bound = 0;             // ceil(eps n / (floor(log_{1/eps} n) + 1))
  int max_index = 0;
  int index_bound = 0;                       // ceil(log_{1/eps} n)
  std::uint64_t max_radius = 0;              // over cluster centers
  RoundLedger ledger;
};

/// One round of rapid ball growing; throws std::invalid_argument for t < 2 or eps outside (0, 1).
PartialColoring rapid_ball_growing(const Graph& g, const BallGrowthParams& params,
                                   RoundLedger ledger = RoundLedger::local());

struct AltCall {
  std::size_t nodes = 0;
  std::size_t covered = 0;
  std::size_t covered_bound = 0;
  int max_index = 0;
  int index_bound = 0;
};

struct AltDecomposition {
  WeakDecomposition decomposition;  // algorithm "alt"
  BallGrowthParams params;
  std::vector<AltCall> calls;
  std::uint64_t max_radius = 0;
};

/// Repeats rapid ball growing on the induced uncolored remainder.
AltDecomposition full_alt_decomposition(const Graph& g, const BallGrowthParams& params,
                                        RoundLedger ledger = RoundLedger::local());

struct DecompositionSummary {
  std::string algorithm;
  int colors = 0;
  int max_weak_diameter = 0;
  std::uint64_t rounds = 0;
};

struct ComparisonReport {
  std::size_t nodes = 0;
  DecompositionSummary weak;
  DecompositionSummary alt;
};

/// Largest hop distance in G between two members of one cluster.
int max_weak_diameter(const Graph& g, const WeakDecomposition& dec);

/// Weak decomposition and alternative decomposition side by side (default parameters).
ComparisonReport compare_decompositions(const Graph& g);

}  // namespace netdecomp

#endif  // NETDECOMP_ALT_DECOMP_HPP_
