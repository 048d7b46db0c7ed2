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

#include "ncverify/rule_engine.h"

#include <gtest/gtest.h>

#include <set>
#include <string>
#include <vector>

#include "testing/model_builder.h"
#include "testing/published_matrix.h"
#include "testing/test_data.h"

namespace ncverify {
namespace {

using ::ncverify::testing::Fixture;
using ::ncverify::testing::kPublishedMatrix;
using ::ncverify::testing::ModelBuilder;

std::set<std::string> RuleIds(const std::vector<Violation>& violations) {
  std::set<std::string> out;
  for (const Violation& v : violations) out.insert(v.rule_id);
  return out;
}

std::vector<std::string> Messages(const std::vector<Violation>& violations) {
  std::vector<std::string> out;
  for (const Violation& v : violations) out.push_back(v.message);
  return out;
}

TEST(RuleMatrixTest, RegistersExactlyThePublishedCells) {
  const RuleMatrix& matrix = RuleMatrix::Default();
  constexpr RuleCategory kOrder[] = {
      RuleCategory::kNonEmpty, RuleCategory::kNonFullWidth, RuleCategory::kType,
      RuleCategory::kKey, RuleCategory::kFormat};
  std::set<RuleMatrix::Key> published;
  for (const auto& row : kPublishedMatrix) {
    auto kind = ParseNodeKind(row.group);
    ASSERT_TRUE(kind.has_value()) << row.group;
    published.insert({*kind, std::string(row.item)});
    const std::vector<LexicalRule>* rules = matrix.RulesFor(*kind, row.item);
    ASSERT_NE(rules, nullptr) << row.group << "." << row.item;
    std::set<RuleCategory> registered;
    for (const LexicalRule& rule : *rules) registered.insert(rule.category);
    for (int i = 0; i < 5; ++i) {
      EXPECT_EQ(registered.contains(kOrder[i]), row.marks[i] == 'x')
          << row.group << "." << row.item << " " << CategoryName(kOrder[i]);
    }
  }
  EXPECT_EQ(matrix.rows().size(), published.size());
  for (const auto& [key, rules] : matrix.rows()) {
    EXPECT_TRUE(published.contains(key))
        << KindName(key.first) << "." << key.second << " is not published";
  }
}

TEST(RuleMatrixTest, EveryLegalItemIsRuledOrListedUnruled) {
  const RuleMatrix& matrix = RuleMatrix::Default();
  std::set<RuleMatrix::Key> unruled(matrix.unruled().begin(),
                                    matrix.unruled().end());
  for (NodeKind kind : AllNodeKinds()) {
    for (std::string_view item : LegalItems(kind)) {
      const bool ruled = matrix.RulesFor(kind, item) != nullptr;
      const bool listed = unruled.contains({kind, std::string(item)});
      EXPECT_NE(ruled, listed) << KindName(kind) << "." << item;
    }
  }
}

TEST(RuleMatrixTest, RulesRunInCategoryOrder) {
  for (const auto& [key, rules] : RuleMatrix::Default().rows()) {
    for (std::size_t i = 1; i < rules.size(); ++i) {
      EXPECT_LT(rules[i - 1].category, rules[i].category)
          << KindName(key.first) << "." << key.second;
    }
  }
}

TEST(RuleMatrixTest, MalformedCatalogIsRejected) {
  EXPECT_THROW(RuleMatrix::FromJson("{"), SchemaError);
  EXPECT_THROW(RuleMatrix::FromJson(R"({"matrix": [{"group": "Nope"}]})"),
               SchemaError);
}

TEST(CheckValueTest, AccessVlanBoundaries) {
  for (const char* ok : {"1", "9", "10", "99", "999", "4000", "4094"}) {
    EXPECT_TRUE(CheckValue(NodeKind::kEthernetSetting, "accessVlan", ok).empty())
        << ok;
  }
  for (const char* bad : {"0", "4095", "4100", "9999", "01", "10000"}) {
    auto violations = CheckValue(NodeKind::kEthernetSetting, "accessVlan", bad);
    ASSERT_EQ(violations.size(), 1u) << bad;
    EXPECT_EQ(violations[0].rule_id, "LEX.FORMAT");
    EXPECT_EQ(violations[0].message, "Enter an integer between 1 and 4094");
  }
}

TEST(CheckValueTest, NonIntegerVlanFailsTypeAndFormat) {
  auto violations = CheckValue(NodeKind::kEthernetSetting, "accessVlan", "ten");
  EXPECT_EQ(RuleIds(violations),
            (std::set<std::string>{"LEX.TYPE", "LEX.FORMAT"}));
  EXPECT_EQ(Messages(violations)[0], "Enter an integer");
}

TEST(CheckValueTest, ModeIsAKeyword) {
  EXPECT_TRUE(CheckValue(NodeKind::kEthernetSetting, "mode", "access").empty());
  EXPECT_TRUE(CheckValue(NodeKind::kEthernetSetting, "mode", "trunk").empty());
  for (const char* bad : {"Access", "TRUNK", "routed", "acces", "access1"}) {
    auto violations = CheckValue(NodeKind::kEthernetSetting, "mode", bad);
    ASSERT_EQ(violations.size(), 1u) << bad;
    EXPECT_EQ(violations[0].rule_id, "LEX.KEY");
    EXPECT_EQ(violations[0].message, "enter either 'access' or 'trunk'");
  }
}

TEST(CheckValueTest, NonEmptyRejectsAnyWhitespace) {
  for (const char* bad : {"", " ", "a b", " a", "a ", "a\tb", "a\nb", "\r"}) {
    auto violations = CheckValue(NodeKind::kHostName, "name", bad);
    EXPECT_TRUE(RuleIds(violations).contains("LEX.NONEMPTY"))
        << "'" << bad << "'";
  }
  auto violations = CheckValue(NodeKind::kHostName, "name", "a b");
  ASSERT_EQ(violations.size(), 1u);
  EXPECT_EQ(violations[0].message, "Input contains spaces");
  EXPECT_TRUE(CheckValue(NodeKind::kHostName, "name", "campus1").empty());
}

TEST(CheckValueTest, NonFullWidthRejectsEveryByteAbove0x7F) {
  for (int byte = 0x80; byte <= 0xFF; ++byte) {
    std::string value = "x";
    value += static_cast<char>(byte);
    auto ids = RuleIds(CheckValue(NodeKind::kHostName, "name", value));
    EXPECT_TRUE(ids.contains("LEX.FULLWIDTH")) << byte;
  }
  // Full-width Latin capital A (U+FF21) and a full-width digit.
  auto violations = CheckValue(NodeKind::kHostName, "name", "\xEF\xBC\xA1");
  ASSERT_EQ(violations.size(), 1u);
  EXPECT_EQ(violations[0].message, "Input contains full-width characters");
  EXPECT_TRUE(RuleIds(CheckValue(NodeKind::kEthernetSetting, "port",
                                 "\xEF\xBC\x92"))
                  .contains("LEX.FULLWIDTH"));
  for (int byte = 0x21; byte <= 0x7E; ++byte) {
    std::string value(1, static_cast<char>(byte));
    EXPECT_FALSE(RuleIds(CheckValue(NodeKind::kHostName, "name", value))
                     .contains("LEX.FULLWIDTH"))
        << byte;
  }
}

TEST(CheckValueTest, BooleanType) {
  EXPECT_TRUE(CheckValue(NodeKind::kEthernetSetting, "shutdown", "true").empty());
  EXPECT_TRUE(CheckValue(NodeKind::kEthernetSetting, "shutdown", "false").empty());
  auto violations = CheckValue(NodeKind::kEthernetSetting, "shutdown", "yes");
  ASSERT_EQ(violations.size(), 1u);
  EXPECT_EQ(violations[0].rule_id, "LEX.TYPE");
  EXPECT_EQ(violations[0].message, "enter a boolean");
}

TEST(CheckValueTest, AddressFormats) {
  EXPECT_TRUE(
      CheckValue(NodeKind::kVlanSetting, "ipAddress", "10.0.2.2").empty());
  for (const char* bad : {"10.0.2", "10.0.2.256", "10.0.2.2.1", "a.b.c.d"}) {
    EXPECT_TRUE(RuleIds(CheckValue(NodeKind::kVlanSetting, "ipAddress", bad))
                    .contains("LEX.FORMAT"))
        << bad;
  }
  EXPECT_TRUE(
      CheckValue(NodeKind::kVlanSetting, "subnetMask", "255.255.255.0").empty());
  EXPECT_TRUE(RuleIds(CheckValue(NodeKind::kVlanSetting, "subnetMask",
                                 "255.0.255.0"))
                  .contains("LEX.FORMAT"));
}

TEST(CheckValueTest, UnknownItemThrows) {
  EXPECT_THROW(CheckValue(NodeKind::kVlan, "nosuch", "1"), UnknownItem);
  EXPECT_THROW(CheckValue(NodeKind::kLink, "cableType", "cat6"), UnknownItem);
}

TEST(CheckNodeTest, FixtureIsClean) {
  EXPECT_TRUE(CheckAllSingle(Fixture()).empty());
}

ModelGraph OneConfig(std::vector<NodeRecord> extra) {
  ModelBuilder b;
  b.Config("c");
  for (NodeRecord& n : extra) b.Add(n.kind, n.name, n.fields, "c");
  return b.Build();
}

TEST(CheckNodeTest, AddressWithoutMask) {
  ModelGraph graph = OneConfig(
      {{NodeKind::kEthernetSetting, "e", {{"port", "1"}, {"ipAddress", "10.0.0.1"}}},
       {NodeKind::kVlanSetting, "v", {{"vlanNum", "2"}, {"subnetMask", "255.255.255.0"}}}});
  auto violations = CheckAllSingle(graph);
  ASSERT_EQ(violations.size(), 2u);
  for (const Violation& v : violations) EXPECT_EQ(v.rule_id, "INTRA.a");
  ASSERT_EQ(violations[0].culprits.size(), 2u);
  EXPECT_EQ(violations[0].culprits[0].node, "e");
  EXPECT_EQ(violations[0].culprits[0].item, "ipAddress");
  EXPECT_EQ(violations[0].culprits[0].value, "10.0.0.1");
  EXPECT_EQ(violations[0].culprits[1].item, "subnetMask");
  EXPECT_EQ(violations[0].culprits[1].value, "");
}

TEST(CheckNodeTest, ModeInconsistentWithVlans) {
  ModelGraph graph = OneConfig(
      {{NodeKind::kEthernetSetting, "e1",
        {{"port", "1"}, {"mode", "access"}, {"allowedVlan", "10"}}},
       {NodeKind::kEthernetSetting, "e2",
        {{"port", "2"}, {"mode", "trunk"}, {"accessVlan", "10"}}},
       {NodeKind::kEthernetSetting, "e3",
        {{"port", "3"}, {"mode", "trunk"}, {"nativeVlan", "10"}}}});
  EXPECT_EQ(RuleIds(CheckNode(graph, "e1")), std::set<std::string>{"INTRA.b"});
  EXPECT_EQ(RuleIds(CheckNode(graph, "e2")), std::set<std::string>{"INTRA.b"});
  EXPECT_TRUE(CheckNode(graph, "e3").empty());
}

TEST(CheckNodeTest, MandatoryItems) {
  ModelGraph graph =
      ModelBuilder()
          .Config("c")
          .Port("c", "e", {{"mode", "access"}, {"accessVlan", "1"}})
          .Add(NodeKind::kOspfSetting, "o", {{"processId", "1"}}, "c")
          .Add(NodeKind::kOspfInterfaceSetting, "oi", {{"areaId", "0"}}, "o")
          .Add(NodeKind::kVlanSetting, "vs", {}, "c")
          .Add(NodeKind::kVlan, "v", {{"name", "x"}}, "c")
          .Build();
  EXPECT_EQ(RuleIds(CheckNode(graph, "e")), std::set<std::string>{"INTRA.c"});
  EXPECT_EQ(RuleIds(CheckNode(graph, "oi")), std::set<std::string>{"INTRA.d"});
  // One finding per node, naming every missing item.
  ASSERT_EQ(CheckNode(graph, "oi").size(), 1u);
  std::vector<Culprit> missing = CheckNode(graph, "oi")[0].culprits;
  ASSERT_EQ(missing.size(), 2u);
  EXPECT_EQ(missing[0].item, "ipAddress");
  EXPECT_EQ(missing[1].item, "wildcardMask");
  EXPECT_EQ(RuleIds(CheckNode(graph, "vs")), std::set<std::string>{"INTRA.e"});
  EXPECT_EQ(RuleIds(CheckNode(graph, "v")), std::set<std::string>{"INTRA.f"});
}

TEST(CheckNodeTest, EmptyValueIsLexicalNotMissing) {
  ModelGraph graph = OneConfig({{NodeKind::kEthernetSetting, "e", {{"port", ""}}}});
  EXPECT_EQ(RuleIds(CheckNode(graph, "e")),
            (std::set<std::string>{"LEX.NONEMPTY", "LEX.TYPE", "LEX.FORMAT"}));
}

TEST(CheckNodeTest, CulpritNamesNodeItemAndValue) {
  ModelGraph graph = OneConfig({{NodeKind::kEthernetSetting, "e",
                                 {{"port", "1"}, {"mode", "access"},
                                  {"accessVlan", "4095"}}}});
  auto violations = CheckNode(graph, "e");
  ASSERT_EQ(violations.size(), 1u);
  EXPECT_EQ(violations[0].culprits,
            (std::vector<Culprit>{{"e", "accessVlan", "4095"}}));
}

TEST(CheckNodeTest, OrphanIsReported) {
  ModelGraph graph = ModelGraph::Build(
      {{NodeKind::kVlan, "v", {{"num", "1"}, {"name", "x"}}}}, {});
  EXPECT_EQ(RuleIds(CheckNode(graph, "v")),
            std::set<std::string>{"STRUCT.orphan"});
}

}  // namespace
}  // namespace ncverify
