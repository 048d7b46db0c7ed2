// Copyright 2026 The ncverify Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Property tests: duplicate-address classification and backbone
// reachability against brute-force oracles on random small models.

#include <gtest/gtest.h>

#include <set>
#include <string>

#include "ncverify/ospf_checks.h"
#include "ncverify/topology_checks.h"
#include "testing/oracles.h"
#include "testing/random_models.h"

namespace ncverify {
namespace {

using ::ncverify::testing::DisconnectedAreasOf;
using ::ncverify::testing::DuplicateFindingsOf;
using ::ncverify::testing::OracleBackbone;
using ::ncverify::testing::OracleDuplicateIp;
using ::ncverify::testing::RandomModel;

constexpr std::uint32_t kModels = 300;

TEST(PropertyTest, DuplicateIpMatchesOracle) {
  std::size_t with_findings = 0;
  for (std::uint32_t seed = 1; seed <= kModels; ++seed) {
    ModelGraph graph = RandomModel(seed);
    auto expected = OracleDuplicateIp(graph);
    with_findings += !expected.empty();
    EXPECT_EQ(DuplicateFindingsOf(CheckDuplicateIp(graph)), expected)
        << "seed " << seed;
  }
  // The generator must actually exercise the check.
  EXPECT_GT(with_findings, kModels / 4);
}

TEST(PropertyTest, BackboneMatchesOracle) {
  std::size_t with_disconnected = 0;
  for (std::uint32_t seed = 1; seed <= kModels; ++seed) {
    ModelGraph graph = RandomModel(seed);
    auto oracle = OracleBackbone(graph);
    with_disconnected += !oracle.disconnected.empty();
    // With OSPF.12 off, OSPF.8 reports every area the backbone misses.
    auto violations =
        CheckBackbone(graph, BindOspf(graph), RuleFilter({"OSPF.12"}));
    EXPECT_EQ(DisconnectedAreasOf(violations), oracle.disconnected)
        << "seed " << seed;
  }
  EXPECT_GT(with_disconnected, kModels / 10);
}

TEST(PropertyTest, GeneratorIsDeterministic) {
  EXPECT_TRUE(StructurallyEqual(RandomModel(42), RandomModel(42)));
}

}  // namespace
}  // namespace ncverify
