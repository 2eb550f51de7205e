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

#include "netdecomp/serialize.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace netdecomp {

using nlohmann::json;

json ledger_to_json(const RoundLedger& ledger) {
  json j = {{"rounds", ledger.rounds},
            {"max_message_bits", ledger.max_message_bits},
            {"violations", ledger.violations},
            {"mode", ledger.congest() ? "CONGEST" : "LOCAL"}};
  j["budget_bits"] = ledger.congest() ? json(ledger.budget_bits) : json(nullptr);
  return j;
}

RoundLedger ledger_from_json(const json& j) {
  RoundLedger ledger = j.at("mode").get<std::string>() == "CONGEST"
                           ? RoundLedger::congest(j.at("budget_bits").get<std::uint64_t>())
                           : RoundLedger::local();
  ledger.rounds = j.at("rounds").get<std::uint64_t>();
  ledger.max_message_bits = j.at("max_message_bits").get<std::uint64_t>();
  ledger.violations = j.at("violations").get<std::uint64_t>();
  return ledger;
}

json weak_to_json(const WeakDecomposition& dec, int id_bits) {
  json clusters = json::array();
  for (const auto& c : dec.clusters) {
    json parent = json::object();
    for (const auto& [child, par] : c.tree.parent) parent[std::to_string(child)] = par;
    clusters.push_back({{"color", c.color},
                        {"label", label_bits(c.label, id_bits)},
                        {"members", c.members},
                        {"tree", {{"root", c.tree.root}, {"parent", parent}, {"terminals", c.tree.terminals}}}});
  }
  return {{"algorithm", dec.algorithm}, {"k", dec.k},           {"colors", dec.colors},
          {"color_of", dec.color_of},   {"clusters", clusters}, {"ledger", ledger_to_json(dec.ledger)}};
}

WeakDecomposition weak_from_json(const json& j) {
  try {
    WeakDecomposition dec;
    dec.algorithm = j.value("algorithm", std::string("weak"));
    dec.k = j.value("k", 1);
    dec.colors = j.at("colors").get<int>();
    dec.color_of = j.at("color_of").get<std::vector<int>>();
    for (const auto& jc : j.at("clusters")) {
      Cluster c;
      c.color = jc.at("color").get<int>();
      const auto label = jc.at("label").get<std::string>();
      for (char ch : label) {
        if (ch != '0' && ch != '1') throw std::runtime_error("label is not a bit string");
        c.label = (c.label << 1) | static_cast<NodeIdent>(ch - '0');
      }
      c.members = jc.at("members").get<std::vector<Node>>();
      const auto& jt = jc.at("tree");
      c.tree.root = jt.at("root").get<Node>();
      for (const auto& [child, par] : jt.at("parent").items()) {
        c.tree.parent.emplace_back(static_cast<Node>(std::stoul(child)), par.get<Node>());
      }
      std::sort(c.tree.parent.begin(), c.tree.parent.end());
      c.tree.terminals = jt.at("terminals").get<std::vector<Node>>();
      dec.clusters.push_back(std::move(c));
    }
    if (j.contains("ledger")) dec.ledger = ledger_from_json(j.at("ledger"));
    return dec;
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed decomposition: ") + e.what());
  } catch (const std::logic_error& e) {
    throw std::runtime_error(std::string("malformed decomposition: ") + e.what());
  }
}

json strong_to_json(const StrongDecomposition& dec) {
  json clusters = json::array();
  for (const auto& c : dec.clusters) clusters.push_back({{"color", c.color}, {"members", c.members}});
  return {{"algorithm", "strong"},
          {"colors", dec.colors},
          {"color_of", dec.color_of},
          {"clusters", clusters},
          {"ledger", ledger_to_json(dec.ledger)}};
}

std::vector<int> color_of_from_json(const json& j) {
  try {
    return j.at("color_of").get<std::vector<int>>();
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed decomposition: ") + e.what());
  }
}

json mis_to_json(const MisResult& r) {
  return {{"mis", r.members}, {"ledger", ledger_to_json(r.ledger)}};
}

json coloring_to_json(const ColoringResult& r) {
  return {{"color", r.color}, {"ledger", ledger_to_json(r.ledger)}};
}

std::string rational_to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

json derandomize_to_json(const DerandomizeResult& r) {
  std::vector<int> bits(r.bits.raw().begin(), r.bits.raw().end());
  return {{"bits", bits},
          {"bits_per_node", r.bits.bits_per_node()},
          {"initial_expectation", rational_to_string(r.initial_expectation)},
          {"final_cost", rational_to_string(r.final_cost)},
          {"ledger", ledger_to_json(r.ledger)}};
}

json ruling_to_json(const RulingSetResult& r, std::span<const Node> restrict_to) {
  std::vector<Node> domain(restrict_to.begin(), restrict_to.end());
  return {{"ruling_set", r.members}, {"restrict_to", domain}, {"ledger", ledger_to_json(r.ledger)}};
}

json comparison_to_json(const ComparisonReport& r) {
  auto side = [](const DecompositionSummary& s) {
    return json{{"algorithm", s.algorithm},
                {"colors", s.colors},
                {"max_weak_diameter", s.max_weak_diameter},
                {"rounds", s.rounds}};
  };
  return {{"n", r.nodes}, {"weak", side(r.weak)}, {"alt", side(r.alt)}};
}

}  // namespace netdecomp
