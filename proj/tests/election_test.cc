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

#include "ncverify/election.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "ncverify/ospf_checks.h"
#include "testing/test_data.h"

namespace ncverify {
namespace {

using ::ncverify::testing::Fixture;

ElectionMember Member(const std::string& name, const std::string& router_id,
                      int priority = 1) {
  return {name, name + "_cfg", *Ipv4::Parse(router_id),
          *Ipv4::Parse("10.0.0." + std::to_string(name.size())), priority};
}

TEST(ElectionTest, HigherRouterIdWinsAtEqualPriority) {
  ElectionResult r =
      Elect({Member("a", "3.3.3.3"), Member("b", "2.2.2.2"), Member("c", "1.1.1.1")});
  ASSERT_TRUE(r.dr && r.bdr);
  EXPECT_EQ(r.dr->interface, "a");
  EXPECT_EQ(r.bdr->interface, "b");
  EXPECT_EQ(r.RoleOf("c"), OspfRole::kDrOther);
  EXPECT_EQ(RoleName(r.RoleOf("a")), "DR");
}

TEST(ElectionTest, PriorityBeatsRouterId) {
  ElectionResult r = Elect({Member("a", "9.9.9.9"), Member("b", "1.1.1.1", 5)});
  EXPECT_EQ(r.dr->interface, "b");
  EXPECT_EQ(r.bdr->interface, "a");
}

TEST(ElectionTest, PriorityZeroIsNeverElected) {
  ElectionResult r = Elect({Member("a", "9.9.9.9", 0), Member("b", "1.1.1.1")});
  EXPECT_EQ(r.dr->interface, "b");
  EXPECT_FALSE(r.bdr.has_value());
  EXPECT_EQ(r.RoleOf("a"), OspfRole::kDrOther);
}

TEST(ElectionTest, NoEligibleMember) {
  ElectionResult r = Elect({Member("a", "9.9.9.9", 0)});
  EXPECT_FALSE(r.dr.has_value());
  EXPECT_FALSE(r.bdr.has_value());
  EXPECT_FALSE(Elect({}).dr.has_value());
}

TEST(ElectionTest, MatchesSortOracleAndIgnoresOrder) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<ElectionMember> members;
    const int n = std::uniform_int_distribution<int>(1, 6)(rng);
    for (int i = 0; i < n; ++i) {
      members.push_back(Member(
          std::string(i + 1, 'm'),
          std::to_string(std::uniform_int_distribution<int>(1, 9)(rng)) +
              ".0.0." + std::to_string(i),
          std::uniform_int_distribution<int>(0, 2)(rng)));
    }
    // Oracle: eligible members sorted by (priority, router id) descending.
    std::vector<ElectionMember> eligible;
    for (const ElectionMember& m : members) {
      if (m.priority > 0) eligible.push_back(m);
    }
    std::sort(eligible.begin(), eligible.end(), [](const auto& x, const auto& y) {
      return std::tie(x.priority, x.router_id) > std::tie(y.priority, y.router_id);
    });
    ElectionResult expected = Elect(members);
    if (eligible.empty()) {
      EXPECT_FALSE(expected.dr.has_value());
    } else {
      EXPECT_EQ(expected.dr->interface, eligible[0].interface);
      if (eligible.size() > 1) {
        EXPECT_EQ(expected.bdr->interface, eligible[1].interface);
      }
    }
    std::shuffle(members.begin(), members.end(), rng);
    ElectionResult shuffled = Elect(members);
    EXPECT_EQ(shuffled.roles, expected.roles);
  }
}

TEST(ElectionTest, FixtureVlan20Segment) {
  const ModelGraph& graph = Fixture();
  auto result = ElectFor(graph, BindOspf(graph), "campus1_VS20");
  ASSERT_TRUE(result.has_value());
  EXPECT_EQ(result->dr->router_id.ToString(), "3.3.3.3");
  EXPECT_EQ(result->bdr->router_id.ToString(), "2.2.2.2");
  EXPECT_EQ(result->roles.size(), 2u);
}

TEST(ElectionTest, UnboundInterfaceHasNoElection) {
  const ModelGraph& graph = Fixture();
  EXPECT_FALSE(ElectFor(graph, BindOspf(graph), "campus1_Fa4").has_value());
}

}  // namespace
}  // namespace ncverify
