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

#include "netdecomp/sync_engine.hpp"

namespace netdecomp {

RoundLedger RoundLedger::congest(std::uint64_t budget_bits) {
  if (budget_bits == 0) throw std::invalid_argument("CONGEST budget must be positive");
  RoundLedger ledger;
  ledger.model = CommModel::kCongest;
  ledger.budget_bits = budget_bits;
  return ledger;
}

RoundLedger RoundLedger::congest_for(std::size_t n) {
  return congest(32 * static_cast<std::uint64_t>(std::max(1, ceil_log2(n))));
}

void RoundLedger::absorb(const RoundLedger& sub, std::uint64_t round_scale) {
  rounds += sub.rounds * round_scale;
  max_message_bits = std::max(max_message_bits, sub.max_message_bits);
  violations += sub.violations;
}

void charge_cluster_op(RoundLedger& ledger, std::uint64_t steiner_radius,
                       std::uint64_t edge_tree_multiplicity, std::uint64_t message_bits) {
  std::uint64_t rounds = 2 * steiner_radius + 1;
  if (ledger.congest()) {
    rounds *= std::max<std::uint64_t>(1, edge_tree_multiplicity);
    if (message_bits > ledger.budget_bits) ++ledger.violations;
  }
  ledger.add_rounds(rounds);
  ledger.observe_message_bits(message_bits);
}

}  // namespace netdecomp
