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

#include "ncverify/verifier.h"

#include <gtest/gtest.h>

#include <string>

#include "json.hpp"
#include "ncverify/fault_injector.h"
#include "testing/model_builder.h"
#include "testing/test_data.h"

namespace ncverify {
namespace {

using ::ncverify::testing::Fixture;
using ::ncverify::testing::ModelBuilder;

TEST(VerifierTest, FixtureIsCleanAcrossAllLayers) {
  Report report = Verify(Fixture());
  EXPECT_TRUE(report.gate_passed);
  EXPECT_TRUE(report.later_layers_run);
  EXPECT_TRUE(report.clean());
  EXPECT_EQ(FormatReport(Fixture(), report), "0 violations\n");
}

ModelGraph LexicallyBrokenWithDuplicateIp() {
  ModelBuilder b;
  b.Config("a").Config("b").Vlan("a", 10).Vlan("b", 10);
  b.Svi("a", "a_vs", 10, "10.0.0.1").Svi("b", "b_vs", 10, "10.0.0.1");
  b.Add(NodeKind::kEthernetSetting, "a1",
        {{"port", "1"}, {"mode", "access"}, {"accessVlan", "4095"}}, "a");
  return b.Build();
}

TEST(VerifierTest, SingleNodeErrorsGateLaterLayers) {
  ModelGraph graph = LexicallyBrokenWithDuplicateIp();
  Report report = Verify(graph);
  EXPECT_FALSE(report.gate_passed);
  EXPECT_FALSE(report.later_layers_run);
  EXPECT_FALSE(report.single_node.empty());
  EXPECT_TRUE(report.multi_node.empty());

  VerifyOptions options;
  options.ignore_gate = true;
  Report forced = Verify(graph, options);
  EXPECT_TRUE(forced.later_layers_run);
  EXPECT_FALSE(forced.multi_node.empty());
}

TEST(VerifierTest, WarningsDoNotCloseTheGate) {
  ModelBuilder b;
  b.Config("a");
  b.Add(NodeKind::kEthernetSetting, "a1", {{"port", "1"}}, "a");
  Report report = Verify(b.Build());
  EXPECT_TRUE(report.gate_passed);
  ASSERT_EQ(report.multi_node.size(), 1u);
  EXPECT_EQ(report.multi_node[0].severity, Severity::kWarning);
}

TEST(VerifierTest, ReportGroupsByDevice) {
  ModelGraph graph = Inject(
      Fixture(), FindMutation(DefaultMutationCatalog(), "misconfigured-area-id"));
  std::string text = FormatReport(graph, Verify(graph));
  EXPECT_NE(text.find("campus3:\n"), std::string::npos);
  EXPECT_NE(
      text.find("OSPF.3 Area IDs of campus3_OS4 and campus4_OS4 do not match"),
      std::string::npos);
  EXPECT_NE(text.find("campus3_OS4.areaId = \"3\""), std::string::npos);
}

TEST(VerifierTest, JsonAndTextListTheSameViolations) {
  ModelGraph graph = Inject(
      Fixture(), FindMutation(DefaultMutationCatalog(), "overlapping-subnet"));
  Report report = Verify(graph);
  auto json = nlohmann::ordered_json::parse(ReportToJson(report, "m.json"));
  std::size_t listed = 0;
  for (const auto& [layer, violations] : json["layers"].items()) {
    listed += violations.size();
  }
  EXPECT_EQ(listed, report.size());
  EXPECT_EQ(json["model"], "m.json");
  EXPECT_EQ(json["gatePassed"], true);
  std::string text = FormatReport(graph, report);
  for (const Violation& v : report.All()) {
    EXPECT_NE(text.find(v.message), std::string::npos) << v.message;
  }
}

TEST(VerifierTest, GatedJsonOmitsLaterLayers) {
  auto json = nlohmann::ordered_json::parse(
      ReportToJson(Verify(LexicallyBrokenWithDuplicateIp()), "m.json"));
  EXPECT_TRUE(json["layers"].contains("singleNode"));
  EXPECT_FALSE(json["layers"].contains("multiNode"));
  EXPECT_FALSE(json["layers"].contains("ospf"));
}

TEST(VerifierTest, DeterministicOrdering) {
  ModelGraph graph = Inject(
      Fixture(), FindMutation(DefaultMutationCatalog(), "timer-mismatch"));
  EXPECT_EQ(FormatReport(graph, Verify(graph)),
            FormatReport(graph, Verify(graph)));
}

}  // namespace
}  // namespace ncverify
