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

#include <algorithm>
#include <array>

#include "json.hpp"
#include "ncverify/embedded_data.h"

namespace ncverify {
namespace {

using json = nlohmann::json;

LexicalRule MakeRule(RuleCategory category, const json& spec) {
  if (!spec.is_object() || !spec.contains("pattern") ||
      !spec.contains("message")) {
    throw SchemaError("rule catalog: rule needs 'pattern' and 'message'");
  }
  LexicalRule rule{category, spec["pattern"].get<std::string>(),
                   spec["message"].get<std::string>(), {}};
  try {
    rule.regex = std::regex(rule.pattern, std::regex::ECMAScript);
  } catch (const std::regex_error& e) {
    throw SchemaError("rule catalog: bad pattern '" + rule.pattern +
                      "': " + e.what());
  }
  return rule;
}

const json& Lookup(const json& table, const json& name, std::string_view what) {
  const std::string key = name.get<std::string>();
  if (!table.contains(key)) {
    throw SchemaError("rule catalog: unknown " + std::string(what) + " '" +
                      key + "'");
  }
  return table[key];
}

NodeKind KindOf(const json& row) {
  auto kind = ParseNodeKind(row.at("kind").get<std::string>());
  if (!kind) {
    throw SchemaError("rule catalog: unknown kind " + row.at("kind").dump());
  }
  return *kind;
}

Culprit Slot(const NodeRecord& node, std::string_view item) {
  const std::string* v = node.Field(item);
  return {node.name, std::string(item), v ? *v : std::string()};
}

Violation Intra(std::string rule_id, std::string message,
                std::vector<Culprit> culprits) {
  return {std::move(rule_id), Severity::kError, std::move(message),
          std::move(culprits)};
}

void CheckIpMaskPair(const NodeRecord& node, std::vector<Violation>& out) {
  if (node.Has("ipAddress") != node.Has("subnetMask")) {
    out.push_back(Intra("INTRA.a",
                        "ipAddress and subnetMask of " + node.name +
                            " must be set together",
                        {Slot(node, "ipAddress"), Slot(node, "subnetMask")}));
  }
}

void CheckSwitchportMode(const NodeRecord& node, std::vector<Violation>& out) {
  const std::string* mode = node.Field("mode");
  if (mode == nullptr) return;
  if (*mode == "access") {
    if (!node.Has("accessVlan")) {
      out.push_back(Intra("INTRA.b",
                          "access port " + node.name + " has no accessVlan",
                          {Slot(node, "mode"), Slot(node, "accessVlan")}));
    }
    for (std::string_view trunk_item : {"nativeVlan", "allowedVlan"}) {
      if (node.Has(trunk_item)) {
        out.push_back(Intra("INTRA.b",
                            "access port " + node.name + " sets " +
                                std::string(trunk_item),
                            {Slot(node, "mode"), Slot(node, trunk_item)}));
      }
    }
  } else if (*mode == "trunk" && node.Has("accessVlan")) {
    out.push_back(Intra("INTRA.b",
                        "trunk port " + node.name + " sets accessVlan",
                        {Slot(node, "mode"), Slot(node, "accessVlan")}));
  }
}

void CheckMandatory(const NodeRecord& node, std::string rule_id,
                    std::initializer_list<std::string_view> items,
                    std::vector<Violation>& out) {
  std::vector<Culprit> missing;
  std::string names;
  for (std::string_view item : items) {
    if (!node.Has(item)) {
      missing.push_back({node.name, std::string(item), ""});
      names += (names.empty() ? "" : ", ") + std::string(item);
    }
  }
  if (!missing.empty()) {
    out.push_back(Intra(std::move(rule_id),
                        "Missing " + names + " in " +
                            std::string(KindName(node.kind)) + " " + node.name,
                        std::move(missing)));
  }
}

}  // namespace

std::string_view CategoryName(RuleCategory category) {
  switch (category) {
    case RuleCategory::kNonEmpty: return "NonEmpty";
    case RuleCategory::kNonFullWidth: return "NonFullWidth";
    case RuleCategory::kType: return "Type";
    case RuleCategory::kKey: return "Key";
    case RuleCategory::kFormat: return "Format";
  }
  return "?";
}

std::string RuleIdFor(RuleCategory category) {
  switch (category) {
    case RuleCategory::kNonEmpty: return "LEX.NONEMPTY";
    case RuleCategory::kNonFullWidth: return "LEX.FULLWIDTH";
    case RuleCategory::kType: return "LEX.TYPE";
    case RuleCategory::kKey: return "LEX.KEY";
    case RuleCategory::kFormat: return "LEX.FORMAT";
  }
  return "LEX.?";
}

const RuleMatrix& RuleMatrix::Default() {
  static const RuleMatrix matrix =
      FromJson(EmbeddedData("data/rule_catalog.json"));
  return matrix;
}

RuleMatrix RuleMatrix::FromJson(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
    RuleMatrix m;
    for (const json& row : doc.at("matrix")) {
      NodeKind kind = KindOf(row);
      std::string item = row.at("item").get<std::string>();
      if (!IsLegalItem(kind, item)) {
        throw SchemaError("rule catalog: " + std::string(KindName(kind)) +
                          "." + item + " is not a metamodel item");
      }
      std::vector<LexicalRule> rules;
      rules.push_back(MakeRule(RuleCategory::kNonEmpty, doc.at("nonEmpty")));
      rules.push_back(
          MakeRule(RuleCategory::kNonFullWidth, doc.at("nonFullWidth")));
      if (!row.at("type").is_null()) {
        rules.push_back(MakeRule(RuleCategory::kType,
                                 Lookup(doc.at("types"), row["type"], "type")));
      }
      if (!row.at("key").is_null()) {
        rules.push_back(MakeRule(RuleCategory::kKey,
                                 Lookup(doc.at("keys"), row["key"], "key")));
      }
      if (!row.at("format").is_null()) {
        rules.push_back(MakeRule(
            RuleCategory::kFormat,
            Lookup(doc.at("formats"), row["format"], "format")));
      }
      if (!m.rows_.emplace(Key{kind, item}, std::move(rules)).second) {
        throw SchemaError("rule catalog: duplicate row " +
                          std::string(KindName(kind)) + "." + item);
      }
    }
    for (const json& row : doc.at("unruled")) {
      m.unruled_.emplace_back(KindOf(row), row.at("item").get<std::string>());
    }
    return m;
  } catch (const json::exception& e) {
    throw SchemaError(std::string("rule catalog: ") + e.what());
  }
}

const std::vector<LexicalRule>* RuleMatrix::RulesFor(
    NodeKind kind, std::string_view item) const {
  auto it = rows_.find(Key{kind, std::string(item)});
  return it == rows_.end() ? nullptr : &it->second;
}

std::vector<Violation> CheckValue(NodeKind kind, std::string_view item,
                                  std::string_view value,
                                  const RuleMatrix& matrix) {
  const std::vector<LexicalRule>* rules = matrix.RulesFor(kind, item);
  if (rules == nullptr) throw UnknownItem(kind, item);
  std::vector<Violation> out;
  for (const LexicalRule& rule : *rules) {
    if (!std::regex_match(value.begin(), value.end(), rule.regex)) {
      out.push_back({RuleIdFor(rule.category), Severity::kError, rule.message,
                     {{"", std::string(item), std::string(value)}}});
    }
  }
  return out;
}

std::vector<Violation> CheckNode(const ModelGraph& graph, std::string_view name,
                                 const RuleMatrix& matrix) {
  const NodeRecord& node = graph.At(name);
  std::vector<Violation> out;
  for (const auto& [item, value] : node.fields) {
    if (matrix.RulesFor(node.kind, item) == nullptr) continue;  // unruled item
    for (Violation& v : CheckValue(node.kind, item, value, matrix)) {
      v.culprits.front().node = node.name;
      out.push_back(std::move(v));
    }
  }

  switch (node.kind) {
    case NodeKind::kEthernetSetting:
      CheckIpMaskPair(node, out);
      CheckSwitchportMode(node, out);
      CheckMandatory(node, "INTRA.c", {"port"}, out);
      break;
    case NodeKind::kVlanSetting:
      CheckIpMaskPair(node, out);
      CheckMandatory(node, "INTRA.e", {"vlanNum"}, out);
      break;
    case NodeKind::kOspfInterfaceSetting:
      CheckMandatory(node, "INTRA.d", {"ipAddress", "wildcardMask", "areaId"},
                     out);
      break;
    case NodeKind::kVlan:
      CheckMandatory(node, "INTRA.f", {"num"}, out);
      break;
    default:
      break;
  }

  if (node.kind != NodeKind::kConfig && node.kind != NodeKind::kLink &&
      graph.FindConfigOf(node.name) == nullptr) {
    out.push_back(Intra("STRUCT.orphan",
                        std::string(KindName(node.kind)) + " " + node.name +
                            " is not attached to any Config",
                        {{node.name, "", ""}}));
  }
  return out;
}

std::vector<Violation> CheckAllSingle(const ModelGraph& graph,
                                      const RuleMatrix& matrix) {
  std::vector<const NodeRecord*> order;
  for (const NodeRecord& n : graph.nodes()) order.push_back(&n);
  std::sort(order.begin(), order.end(),
            [](const NodeRecord* a, const NodeRecord* b) {
              return a->name < b->name;
            });
  std::vector<Violation> out;
  for (const NodeRecord* n : order) {
    std::vector<Violation> per_node = CheckNode(graph, n->name, matrix);
    std::stable_sort(per_node.begin(), per_node.end(),
                     [](const Violation& a, const Violation& b) {
                       return a.culprits.front().item < b.culprits.front().item;
                     });
    for (Violation& v : per_node) out.push_back(std::move(v));
  }
  return out;
}

}  // namespace ncverify
