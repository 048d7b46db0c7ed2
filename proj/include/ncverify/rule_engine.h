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

#ifndef NCVERIFY_RULE_ENGINE_H_
#define NCVERIFY_RULE_ENGINE_H_

#include <map>
#include <regex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ncverify/errors.h"
#include "ncverify/model.h"
#include "ncverify/violation.h"

namespace ncverify {

// Lexical/syntactic rule categories, in evaluation order.
enum class RuleCategory { kNonEmpty, kNonFullWidth, kType, kKey, kFormat };

std::string_view CategoryName(RuleCategory category);
// "LEX.NONEMPTY", "LEX.FULLWIDTH", "LEX.TYPE", "LEX.KEY", "LEX.FORMAT".
std::string RuleIdFor(RuleCategory category);

struct LexicalRule {
  RuleCategory category;
  std::string pattern;
  std::string message;
  std::regex regex;
};

class UnknownItem : public Error {
 public:
  UnknownItem(NodeKind kind, std::string_view item)
      : Error("no rules registered for " + std::string(KindName(kind)) + "." +
              std::string(item)) {}
};

// (kind, item) -> ordered rules, loaded from the rule catalog data file.
class RuleMatrix {
 public:
  using Key = std::pair<NodeKind, std::string>;

  // The catalog compiled into the library (data/rule_catalog.json).
  static const RuleMatrix& Default();
  // Throws SchemaError on a malformed catalog.
  static RuleMatrix FromJson(std::string_view text);

  // nullptr when the item has no rules.
  const std::vector<LexicalRule>* RulesFor(NodeKind kind,
                                           std::string_view item) const;
  const std::map<Key, std::vector<LexicalRule>>& rows() const { return rows_; }
  const std::vector<Key>& unruled() const { return unruled_; }

 private:
  std::map<Key, std::vector<LexicalRule>> rows_;
  std::vector<Key> unruled_;
};

// One violation per failed category, messages as catalogued; empty iff the
// value satisfies every applicable rule. Culprit node names are left empty.
// Throws UnknownItem when (kind, item) has no row.
std::vector<Violation> CheckValue(
    NodeKind kind, std::string_view item, std::string_view value,
    const RuleMatrix& matrix = RuleMatrix::Default());

// Lexical checks over the node's present fields plus the intra-node cases:
//   INTRA.a  ipAddress without subnetMask or vice versa
//   INTRA.b  switchport mode inconsistent with accessVlan/nativeVlan/allowedVlan
//   INTRA.c  EthernetSetting without port
//   INTRA.d  OspfInterfaceSetting without ipAddress, wildcardMask or areaId
//   INTRA.e  VlanSetting without vlanNum
//   INTRA.f  Vlan without num
// and STRUCT.orphan for nodes that no Config owns. Throws UnknownNode.
std::vector<Violation> CheckNode(const ModelGraph& graph, std::string_view node,
                                 const RuleMatrix& matrix = RuleMatrix::Default());

// CheckNode over every node, ordered by node name then item.
std::vector<Violation> CheckAllSingle(
    const ModelGraph& graph, const RuleMatrix& matrix = RuleMatrix::Default());

}  // namespace ncverify

#endif  // NCVERIFY_RULE_ENGINE_H_
