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

#ifndef NETDECOMP_VERIFIER_HPP_
#define NETDECOMP_VERIFIER_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "netdecomp/cluster_state.hpp"
#include "netdecomp/graph.hpp"

namespace netdecomp {

struct Check {
  std::string name;
  bool pass = true;
  nlohmann::json witness;  // null when passing
};

struct Report {
  std::vector<Check> checks;

  bool ok() const;
  void add(std::string name, bool pass, nlohmann::json witness = nullptr);
  /// First failing check, if any.
  const Check* first_failure() const;
  nlohmann::json to_json() const;
};

/// Bounds for verify_weak; unset bounds are not checked.
struct WeakBounds {
  int k = 1;
  std::optional<std::uint64_t> radius;
  std::optional<int> colors;
  std::optional<std::uint64_t> congestion;  // trees per edge within one color
};

/// Checks a weak decomposition of G^k: totality, same-color separation,
/// Steiner tree validity and radius, weak diameter, color count, congestion.
Report verify_weak(const Graph& g, const WeakDecomposition& dec, const WeakBounds& bounds = {});

/// Checks that every component of every color class has diameter at most
/// `diameter_bound` inside the component.
Report verify_strong(const Graph& g, std::span<const int> color_of,
                     std::optional<int> diameter_bound, std::optional<int> color_bound);

Report verify_mis(const Graph& g, std::span<const Node> members);

Report verify_coloring(const Graph& g, std::span<const std::int64_t> color,
                       const std::vector<std::vector<std::int64_t>>* lists = nullptr);

/// Members must lie in `restrict_to`, be pairwise non-adjacent, and reach
/// every node of `restrict_to` within `beta` hops inside G[restrict_to].
Report verify_ruling(const Graph& g, std::span<const Node> members,
                     std::span<const Node> restrict_to, int beta);

/// Invariants after one phase: labels sharing the processed bit suffix form
/// classes at distance > k among alive nodes, tree radii are at most
/// (phase + 1) k R, every alive node is a terminal of its label's tree, and
/// at most a 1/(2b) fraction of the phase's alive nodes died.
Report check_phase_invariants(const PhaseSnapshot& snapshot);

}  // namespace netdecomp

#endif  // NETDECOMP_VERIFIER_HPP_
