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

#include <gtest/gtest.h>

#include "netdecomp/decomp_power.hpp"
#include "netdecomp/serialize.hpp"
#include "test_util.hpp"

namespace netdecomp {
namespace {

TEST(Serialize, WeakRoundTrip) {
  Graph g = shuffle_ids(gen_random(90, 0.05, 3), 4);
  WeakDecomposition dec = power_decomposition(g, 2, RoundLedger::congest_for(g.node_count()));
  nlohmann::json j = weak_to_json(dec, g.id_bits());
  EXPECT_EQ(j.at("algorithm"), "power");
  EXPECT_EQ(j.at("clusters").at(0).at("label").get<std::string>().size(),
            static_cast<std::size_t>(g.id_bits()));
  WeakDecomposition back = weak_from_json(nlohmann::json::parse(j.dump()));
  EXPECT_EQ(back.algorithm, dec.algorithm);
  EXPECT_EQ(back.k, dec.k);
  EXPECT_EQ(back.colors, dec.colors);
  EXPECT_EQ(back.color_of, dec.color_of);
  ASSERT_EQ(back.clusters.size(), dec.clusters.size());
  for (std::size_t i = 0; i < dec.clusters.size(); ++i) {
    EXPECT_EQ(back.clusters[i].label, dec.clusters[i].label);
    EXPECT_EQ(back.clusters[i].members, dec.clusters[i].members);
    EXPECT_EQ(back.clusters[i].tree.parent, dec.clusters[i].tree.parent);
    EXPECT_EQ(back.clusters[i].tree.root, dec.clusters[i].tree.root);
  }
  EXPECT_EQ(back.ledger, dec.ledger);
}

TEST(Serialize, MalformedDecomposition) {
  EXPECT_THROW(weak_from_json(nlohmann::json{{"colors", 1}}), std::runtime_error);
  nlohmann::json bad = weak_to_json(weak_decomposition(gen_path(3)), 2);
  bad["clusters"][0]["label"] = "01x";
  EXPECT_THROW(weak_from_json(bad), std::runtime_error);
}

TEST(Serialize, LedgerAndRational) {
  RoundLedger l = RoundLedger::congest(40);
  l.rounds = 17;
  l.violations = 2;
  l.max_message_bits = 55;
  EXPECT_EQ(ledger_from_json(ledger_to_json(l)), l);
  EXPECT_EQ(rational_to_string(Rational(3, 6)), "1/2");
  EXPECT_EQ(rational_to_string(Rational(4)), "4");
}

}  // namespace
}  // namespace netdecomp
