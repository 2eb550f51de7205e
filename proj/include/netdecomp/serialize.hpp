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

#ifndef NETDECOMP_SERIALIZE_HPP_
#define NETDECOMP_SERIALIZE_HPP_

#include <json.hpp>

#include "netdecomp/alt_decomp.hpp"
#include "netdecomp/applications.hpp"
#include "netdecomp/cluster_state.hpp"
#include "netdecomp/decomp_strong.hpp"
#include "netdecomp/ruling_set.hpp"
#include "netdecomp/sync_engine.hpp"

namespace netdecomp {

// {"rounds", "max_message_bits", "violations", "mode": "LOCAL"|"CONGEST", "budget_bits": int|null}
nlohmann::json ledger_to_json(const RoundLedger& ledger);
RoundLedger ledger_from_json(const nlohmann::json& j);

// {"algorithm", "k", "colors", "color_of", "clusters": [{"color", "label", "members",
//  "tree": {"root", "parent": {child: parent}, "terminals"}}], "ledger"}
// Labels are written as id_bits-wide binary strings.
nlohmann::json weak_to_json(const WeakDecomposition& dec, int id_bits);
WeakDecomposition weak_from_json(const nlohmann::json& j);

// {"colors", "color_of", "clusters": [{"color", "members"}], "ledger"}
nlohmann::json strong_to_json(const StrongDecomposition& dec);
/// Reads "color_of" only.
std::vector<int> color_of_from_json(const nlohmann::json& j);

nlohmann::json mis_to_json(const MisResult& r);
nlohmann::json coloring_to_json(const ColoringResult& r);
nlohmann::json derandomize_to_json(const DerandomizeResult& r);
nlohmann::json ruling_to_json(const RulingSetResult& r, std::span<const Node> restrict_to);
nlohmann::json comparison_to_json(const ComparisonReport& r);

/// Exact rational as "p/q" (or "p" when integral).
std::string rational_to_string(const Rational& r);

}  // namespace netdecomp

#endif  // NETDECOMP_SERIALIZE_HPP_
