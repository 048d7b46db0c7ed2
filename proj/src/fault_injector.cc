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

#include "ncverify/fault_injector.h"

#include <algorithm>
#include <cstdio>

#include "json.hpp"
#include "ncverify/embedded_data.h"

namespace ncverify {
namespace {

using json = nlohmann::ordered_json;

struct OpName {
  PatchOp::Kind kind;
  std::string_view name;
};
constexpr OpName kOpNames[] = {
    {PatchOp::Kind::kSet, "set"},
    {PatchOp::Kind::kUnset, "unset"},
    {PatchOp::Kind::kDeleteNode, "delete_node"},
    {PatchOp::Kind::kDeleteEdge, "delete_edge"},
    {PatchOp::Kind::kAddNode, "add_node"},
    {PatchOp::Kind::kAddEdge, "add_edge"},
};

std::string RequireString(const json& object, const char* key,
                          const std::string& where) {
  auto it = object.find(key);
  if (it == object.end() || !it->is_string()) {
    throw SchemaError(where + ": missing string \"" + key + "\"");
  }
  return it->get<std::string>();
}

PatchOp ParseOp(const json& j, const std::string& where) {
  if (!j.is_object()) throw SchemaError(where + ": patch op is not an object");
  PatchOp op;
  const std::string name = RequireString(j, "op", where);
  auto found = std::find_if(std::begin(kOpNames), std::end(kOpNames),
                            [&](const OpName& o) { return o.name == name; });
  if (found == std::end(kOpNames)) {
    throw SchemaError(where + ": unknown patch op \"" + name + "\"");
  }
  op.kind = found->kind;
  op.node = RequireString(j, "node", where);
  switch (op.kind) {
    case PatchOp::Kind::kSet:
      op.item = RequireString(j, "item", where);
      op.value = RequireString(j, "value", where);
      break;
    case PatchOp::Kind::kUnset:
      op.item = RequireString(j, "item", where);
      break;
    case PatchOp::Kind::kDeleteEdge:
    case PatchOp::Kind::kAddEdge:
      op.peer = RequireString(j, "peer", where);
      break;
    case PatchOp::Kind::kAddNode: {
      auto kind = ParseNodeKind(RequireString(j, "kind", where));
      if (!kind) throw SchemaError(where + ": unknown node kind");
      op.node_kind = *kind;
      if (auto it = j.find("fields"); it != j.end()) {
        if (!it->is_object()) throw SchemaError(where + ": fields not an object");
        for (const auto& [k, v] : it->items()) {
          op.fields[k] = v.is_string() ? v.get<std::string>() : v.dump();
        }
      }
      break;
    }
    case PatchOp::Kind::kDeleteNode:
      break;
  }
  return op;
}

bool SameEdge(const AssociationEdge& e, std::string_view a, std::string_view b) {
  return (e.a == a && e.b == b) || (e.a == b && e.b == a);
}

// Mutable working copy of a model.
struct Draft {
  std::vector<NodeRecord> nodes;
  std::vector<AssociationEdge> edges;

  NodeRecord& Node(const std::string& name) {
    for (NodeRecord& n : nodes) {
      if (n.name == name) return n;
    }
    throw TargetMissing("no node named \"" + name + "\"");
  }
};

// Applies `op` to `draft` and returns the ops that undo it.
std::vector<PatchOp> Apply(Draft& draft, const PatchOp& op) {
  std::vector<PatchOp> undo;
  switch (op.kind) {
    case PatchOp::Kind::kSet: {
      NodeRecord& node = draft.Node(op.node);
      auto it = node.fields.find(op.item);
      PatchOp back{.node = op.node, .item = op.item};
      if (it == node.fields.end()) {
        back.kind = PatchOp::Kind::kUnset;
      } else {
        back.kind = PatchOp::Kind::kSet;
        back.value = it->second;
      }
      undo.push_back(std::move(back));
      node.fields[op.item] = op.value;
      break;
    }
    case PatchOp::Kind::kUnset: {
      NodeRecord& node = draft.Node(op.node);
      auto it = node.fields.find(op.item);
      if (it == node.fields.end()) {
        throw TargetMissing("node \"" + op.node + "\" has no item \"" +
                            op.item + "\"");
      }
      undo.push_back({.kind = PatchOp::Kind::kSet,
                      .node = op.node,
                      .item = op.item,
                      .value = it->second});
      node.fields.erase(it);
      break;
    }
    case PatchOp::Kind::kDeleteNode: {
      NodeRecord& node = draft.Node(op.node);
      undo.push_back({.kind = PatchOp::Kind::kAddNode,
                      .node = node.name,
                      .node_kind = node.kind,
                      .fields = node.fields});
      for (const AssociationEdge& e : draft.edges) {
        if (e.a == op.node || e.b == op.node) {
          undo.push_back(
              {.kind = PatchOp::Kind::kAddEdge, .node = e.a, .peer = e.b});
        }
      }
      std::erase_if(draft.nodes,
                    [&](const NodeRecord& n) { return n.name == op.node; });
      std::erase_if(draft.edges, [&](const AssociationEdge& e) {
        return e.a == op.node || e.b == op.node;
      });
      break;
    }
    case PatchOp::Kind::kDeleteEdge: {
      auto it = std::find_if(
          draft.edges.begin(), draft.edges.end(),
          [&](const AssociationEdge& e) { return SameEdge(e, op.node, op.peer); });
      if (it == draft.edges.end()) {
        throw TargetMissing("no edge between \"" + op.node + "\" and \"" +
                            op.peer + "\"");
      }
      undo.push_back(
          {.kind = PatchOp::Kind::kAddEdge, .node = it->a, .peer = it->b});
      draft.edges.erase(it);
      break;
    }
    case PatchOp::Kind::kAddNode:
      draft.nodes.push_back({op.node_kind, op.node, op.fields});
      undo.push_back({.kind = PatchOp::Kind::kDeleteNode, .node = op.node});
      break;
    case PatchOp::Kind::kAddEdge:
      draft.Node(op.node);
      draft.Node(op.peer);
      draft.edges.push_back({op.node, op.peer});
      undo.push_back(
          {.kind = PatchOp::Kind::kDeleteEdge, .node = op.node, .peer = op.peer});
      break;
  }
  return undo;
}

}  // namespace

std::vector<Mutation> ParseMutationCatalog(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("mutation catalog: ") + e.what());
  }
  auto list = doc.find("mutations");
  if (list == doc.end() || !list->is_array()) {
    throw SchemaError("mutation catalog: missing \"mutations\" array");
  }
  std::vector<Mutation> out;
  std::set<std::string> ids;
  for (const json& j : *list) {
    const std::string where = "mutation " + std::to_string(out.size() + 1);
    if (!j.is_object()) throw SchemaError(where + ": not an object");
    Mutation m;
    m.id = RequireString(j, "id", where);
    if (!ids.insert(m.id).second) {
      throw SchemaError("duplicate mutation id \"" + m.id + "\"");
    }
    m.name = RequireString(j, "name", where);
    m.method = RequireString(j, "method", where);
    for (const json& item : j.value("detectionItems", json::array())) {
      m.detection_items.push_back(item.get<std::string>());
    }
    for (const json& site : j.value("culpritSites", json::array())) {
      if (!site.is_array() || site.size() != 2) {
        throw SchemaError(m.id + ": culprit site must be [node, item]");
      }
      m.culprit_sites.emplace_back(site[0].get<std::string>(),
                                   site[1].get<std::string>());
    }
    auto patch = j.find("patch");
    if (patch == j.end() || !patch->is_array()) {
      throw SchemaError(m.id + ": missing \"patch\" array");
    }
    for (const json& op : *patch) m.patch.push_back(ParseOp(op, m.id));
    out.push_back(std::move(m));
  }
  return out;
}

const std::vector<Mutation>& DefaultMutationCatalog() {
  static const std::vector<Mutation> catalog =
      ParseMutationCatalog(EmbeddedData("data/mutation_catalog.json"));
  return catalog;
}

const Mutation& FindMutation(const std::vector<Mutation>& catalog,
                             std::string_view id) {
  for (const Mutation& m : catalog) {
    if (m.id == id) return m;
  }
  throw TargetMissing("no mutation with id \"" + std::string(id) + "\"");
}

ModelGraph Inject(const ModelGraph& graph, const Mutation& mutation) {
  Draft draft{graph.nodes(), graph.edges()};
  for (const PatchOp& op : mutation.patch) Apply(draft, op);
  return ModelGraph::Build(std::move(draft.nodes), std::move(draft.edges));
}

Mutation Inverse(const ModelGraph& graph, const Mutation& mutation) {
  Draft draft{graph.nodes(), graph.edges()};
  std::vector<std::vector<PatchOp>> groups;
  for (const PatchOp& op : mutation.patch) groups.push_back(Apply(draft, op));
  Mutation inverse{.id = mutation.id + "-inverse",
                   .name = "undo " + mutation.name,
                   .method = "restore the values changed by " + mutation.id};
  for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
    inverse.patch.insert(inverse.patch.end(), it->begin(), it->end());
  }
  return inverse;
}

std::string_view OutcomeSymbol(Outcome outcome) {
  switch (outcome) {
    case Outcome::kIdentified:
      return "○";
    case Outcome::kDetectedOnly:
      return "△";
    case Outcome::kUndetected:
      return "×";
  }
  return "?";
}

namespace {

std::string_view OutcomeName(Outcome outcome) {
  switch (outcome) {
    case Outcome::kIdentified:
      return "identified";
    case Outcome::kDetectedOnly:
      return "detected";
    case Outcome::kUndetected:
      return "undetected";
  }
  return "?";
}

std::string Join(const auto& values) {
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) out += ", ";
    out += v;
  }
  return out.empty() ? "-" : out;
}

}  // namespace

std::size_t ExperimentReport::detected() const {
  return std::count_if(results.begin(), results.end(), [](const auto& r) {
    return r.outcome != Outcome::kUndetected;
  });
}

std::size_t ExperimentReport::identified() const {
  return std::count_if(results.begin(), results.end(), [](const auto& r) {
    return r.outcome == Outcome::kIdentified;
  });
}

std::string ExperimentReport::ToText() const {
  std::size_t width = 0;
  for (const MutationResult& r : results) width = std::max(width, r.id.size());
  std::string out;
  for (const MutationResult& r : results) {
    std::string line = std::string(OutcomeSymbol(r.outcome)) + " " + r.id;
    line += std::string(width - r.id.size() + 2, ' ');
    line += "fired: " + Join(r.fired_items);
    if (!r.missing_items.empty()) {
      line += "  (expected but not fired: " + Join(r.missing_items) + ")";
    }
    out += line + "\n";
  }
  out += std::to_string(detected()) + " detected / " +
         std::to_string(identified()) + " identified (of " +
         std::to_string(results.size()) + ")\n";
  return out;
}

std::string ExperimentReport::ToJson() const {
  json list = json::array();
  for (const MutationResult& r : results) {
    list.push_back({{"id", r.id},
                    {"name", r.name},
                    {"result", std::string(OutcomeName(r.outcome))},
                    {"symbol", std::string(OutcomeSymbol(r.outcome))},
                    {"firedItems", r.fired_items},
                    {"missingItems", r.missing_items},
                    {"violations", r.report.size()}});
  }
  json doc;
  doc["mutations"] = std::move(list);
  doc["summary"] = {{"total", results.size()},
                    {"detected", detected()},
                    {"identified", identified()}};
  return doc.dump(2) + "\n";
}

ExperimentReport RunExperiment(const ModelGraph& graph,
                               const std::vector<Mutation>& catalog,
                               const VerifyOptions& options) {
  Report base = Verify(graph, options);
  if (!base.clean()) {
    throw FixtureNotClean("the base model has " + std::to_string(base.size()) +
                          " violations");
  }
  ExperimentReport out;
  for (const Mutation& m : catalog) {
    MutationResult r{.id = m.id, .name = m.name};
    r.report = Verify(Inject(graph, m), options);
    std::vector<Violation> all = r.report.All();
    for (const Violation& v : all) r.fired_items.emplace(RuleItem(v.rule_id));
    for (const std::string& item : m.detection_items) {
      if (!r.fired_items.contains(item)) r.missing_items.push_back(item);
    }
    bool on_site = false;
    for (const Violation& v : all) {
      for (const Culprit& c : v.culprits) {
        for (const auto& [node, item] : m.culprit_sites) {
          on_site = on_site || (c.node == node && c.item == item);
        }
      }
    }
    if (all.empty()) {
      r.outcome = Outcome::kUndetected;
    } else {
      r.outcome = on_site ? Outcome::kIdentified : Outcome::kDetectedOnly;
    }
    out.results.push_back(std::move(r));
  }
  return out;
}

}  // namespace ncverify
