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

#ifndef NETDECOMP_APPLICATIONS_HPP_
#define NETDECOMP_APPLICATIONS_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "netdecomp/alt_decomp.hpp"
#include "netdecomp/graph.hpp"
#include "netdecomp/sync_engine.hpp"

namespace netdecomp {

struct MisResult {
  std::vector<Node> members;  // ascending
  RoundLedger ledger;
};

/// Maximal independent set: greedy per decomposition color and cluster,
/// members in ascending identifier order.
MisResult mis(const Graph& g, RoundLedger ledger = RoundLedger::local());

using ColorValue = std::int64_t;

struct ColoringResult {
  std::vector<ColorValue> color;
  RoundLedger ledger;
};

/// Proper coloring with color(v) in lists[v]; each list needs at least
/// deg(v) + 1 distinct values, else std::invalid_argument naming the node.
ColoringResult list_coloring(const Graph& g, const std::vector<std::vector<ColorValue>>& lists,
                             RoundLedger ledger = RoundLedger::local());

/// list_coloring with every list equal to {0, ..., max degree}.
ColoringResult delta_plus_one_coloring(const Graph& g, RoundLedger ledger = RoundLedger::local());

/// Per-node random bits; -1 marks a bit that is not fixed yet.
class BitAssignment {
 public:
  BitAssignment(std::size_t nodes, int bits_per_node)
      : bits_per_node_(bits_per_node), bits_(nodes * static_cast<std::size_t>(bits_per_node), -1) {}

  int bits_per_node() const { return bits_per_node_; }
  std::int8_t get(Node v, int bit) const { return bits_[index(v, bit)]; }
  bool fixed(Node v, int bit) const { return get(v, bit) >= 0; }
  void set(Node v, int bit, std::int8_t value) { bits_[index(v, bit)] = value; }
  const std::vector<std::int8_t>& raw() const { return bits_; }

 private:
  std::size_t index(Node v, int bit) const {
    return static_cast<std::size_t>(v) * static_cast<std::size_t>(bits_per_node_) +
           static_cast<std::size_t>(bit);
  }
  int bits_per_node_;
  std::vector<std::int8_t> bits_;
};

/**
 * A locally checkable problem solved by a randomized algorithm with
 * `bits_per_node` random bits per node. flag_cost(v) reads only bits within
 * `radius` hops of v; conditional_expectation(v) is its exact expectation
 * when the unfixed bits are uniform.
 */
class LocalProblem {
 public:
  virtual ~LocalProblem() = default;
  virtual int bits_per_node() const = 0;
  virtual int radius() const = 0;
  virtual Rational flag_cost(Node v, const BitAssignment& a) const = 0;
  virtual Rational conditional_expectation(Node v, const BitAssignment& a) const = 0;
};

/// One bit per node; f_v counts edges vu with id(v) < id(u) whose endpoint
/// bits agree. Radius 1.
class CutSplitProblem : public LocalProblem {
 public:
  explicit CutSplitProblem(const Graph& g) : g_(g) {}
  int bits_per_node() const override { return 1; }
  int radius() const override { return 1; }
  Rational flag_cost(Node v, const BitAssignment& a) const override;
  Rational conditional_expectation(Node v, const BitAssignment& a) const override;

 private:
  const Graph& g_;
};

std::unique_ptr<LocalProblem> cut_split_problem(const Graph& g);

struct DerandomizeOptions {
  /// When set, clusters of one color are processed in a seeded random order
  /// instead of by label.
  std::optional<std::uint64_t> cluster_order_seed;
  /// Random full assignments on which the problem's two oracles must agree.
  int spot_checks = 4;
  std::uint64_t spot_seed = 1;
};

struct DerandomizeResult {
  BitAssignment bits{0, 1};
  Rational initial_expectation{0};
  Rational final_cost{0};
  std::size_t fixings = 0;
  RoundLedger ledger;
};

/// Fixes every bit by conditional expectations along a decomposition of
/// G^(2R+1). Throws std::logic_error when the expectation would increase or
/// the problem's oracles disagree on a full assignment.
DerandomizeResult derandomize(const Graph& g, const LocalProblem& problem,
                              const DerandomizeOptions& options = {},
                              RoundLedger ledger = RoundLedger::local());

}  // namespace netdecomp

#endif  // NETDECOMP_APPLICATIONS_HPP_
