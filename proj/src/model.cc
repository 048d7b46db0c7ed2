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

#include "ncverify/model.h"

#include <algorithm>
#include <array>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "ncverify/errors.h"

namespace ncverify {
namespace {

using json = nlohmann::ordered_json;

constexpr std::array kAllKinds = {
    NodeKind::kConfig,          NodeKind::kHostName,
    NodeKind::kEthernetSetting, NodeKind::kVlan,
    NodeKind::kVlanSetting,     NodeKind::kStpSetting,
    NodeKind::kIpRoute,         NodeKind::kOspfSetting,
    NodeKind::kOspfInterfaceSetting, NodeKind::kOspfVirtualLink,
    NodeKind::kClient,          NodeKind::kEthernetType,
    NodeKind::kAccessList,      NodeKind::kLink,
};

constexpr std::array<std::string_view, 1> kConfigItems = {"deviceModel"};
constexpr std::array<std::string_view, 1> kHostNameItems = {"name"};
constexpr std::array<std::string_view, 18> kEthernetItems = {
    "stack",       "slot",
    "port",        "ipAddress",
    "subnetMask",  "accessVlan",
    "nativeVlan",  "allowedVlan",
    "mode",        "accessListNumber",
    "accessListName", "accessListInOrOut",
    "speed",       "duplex",
    "ipVirtualReassembly", "switchportTrunkEncapsulation",
    "shutdown",    "mtu",
};
constexpr std::array<std::string_view, 2> kVlanItems = {"num", "name"};
constexpr std::array<std::string_view, 10> kVlanSettingItems = {
    "vlanNum",          "ipAddress",      "subnetMask",
    "accessListNumber", "accessListName", "accessListInOrOut",
    "ipNatInside",      "ipTcpAdjustMss", "ipVirtualReassembly",
    "shutdown",
};
constexpr std::array<std::string_view, 4> kStpItems = {
    "bridgePriority", "Vlan", "Mode", "macAddress"};
constexpr std::array<std::string_view, 3> kIpRouteItems = {
    "Network", "addressPrefix", "nextHopAddress"};
constexpr std::array<std::string_view, 2> kOspfItems = {"processId",
                                                        "routerId"};
constexpr std::array<std::string_view, 8> kOspfInterfaceItems = {
    "ipAddress",     "wildcardMask",    "areaId", "helloInterval",
    "deadInterval",  "ospdNetworkMode", "stub",   "priority",
};
constexpr std::array<std::string_view, 2> kVirtualLinkItems = {"areaId",
                                                               "routerId"};
constexpr std::array<std::string_view, 4> kClientItems = {
    "IpAddress", "subnetMask", "defaultGateway", "name"};
constexpr std::array<std::string_view, 4> kEthernetTypeItems = {
    "fastEthernet", "Ethernet", "gigabitEthernet", "10gigabitEthernet"};
constexpr std::array<std::string_view, 11> kAccessListItems = {
    "accessListNumber",   "permitOrDeny",  "protocol",
    "sourceIpAddress",    "sourceWildcardMask", "sourceOperator",
    "sourcePort",         "destIpAddress", "destWildcardMask",
    "destPort",           "destOperator",
};
constexpr std::array<std::string_view, 1> kLinkItems = {"cableType"};

// Kind that owns nodes of `kind`, if any.
std::optional<NodeKind> ParentKind(NodeKind kind) {
  switch (kind) {
    case NodeKind::kHostName:
    case NodeKind::kEthernetSetting:
    case NodeKind::kVlan:
    case NodeKind::kVlanSetting:
    case NodeKind::kStpSetting:
    case NodeKind::kIpRoute:
    case NodeKind::kOspfSetting:
    case NodeKind::kAccessList:
      return NodeKind::kConfig;
    case NodeKind::kOspfInterfaceSetting:
    case NodeKind::kOspfVirtualLink:
      return NodeKind::kOspfSetting;
    case NodeKind::kClient:
    case NodeKind::kEthernetType:
      return NodeKind::kEthernetSetting;
    case NodeKind::kConfig:
    case NodeKind::kLink:
      return std::nullopt;
  }
  return std::nullopt;
}

std::string EdgeLabel(const AssociationEdge& e) {
  return "edge " + e.a + " -- " + e.b;
}

}  // namespace

std::span<const NodeKind> AllNodeKinds() { return kAllKinds; }

std::string_view KindName(NodeKind kind) {
  switch (kind) {
    case NodeKind::kConfig: return "Config";
    case NodeKind::kHostName: return "HostName";
    case NodeKind::kEthernetSetting: return "EthernetSetting";
    case NodeKind::kVlan: return "Vlan";
    case NodeKind::kVlanSetting: return "VlanSetting";
    case NodeKind::kStpSetting: return "StpSetting";
    case NodeKind::kIpRoute: return "IpRoute";
    case NodeKind::kOspfSetting: return "OspfSetting";
    case NodeKind::kOspfInterfaceSetting: return "OspfInterfaceSetting";
    case NodeKind::kOspfVirtualLink: return "OspfVirtualLink";
    case NodeKind::kClient: return "Client";
    case NodeKind::kEthernetType: return "EthernetType";
    case NodeKind::kAccessList: return "AccessList";
    case NodeKind::kLink: return "Link";
  }
  return "?";
}

std::optional<NodeKind> ParseNodeKind(std::string_view name) {
  for (NodeKind kind : kAllKinds) {
    if (KindName(kind) == name) return kind;
  }
  return std::nullopt;
}

std::span<const std::string_view> LegalItems(NodeKind kind) {
  switch (kind) {
    case NodeKind::kConfig: return kConfigItems;
    case NodeKind::kHostName: return kHostNameItems;
    case NodeKind::kEthernetSetting: return kEthernetItems;
    case NodeKind::kVlan: return kVlanItems;
    case NodeKind::kVlanSetting: return kVlanSettingItems;
    case NodeKind::kStpSetting: return kStpItems;
    case NodeKind::kIpRoute: return kIpRouteItems;
    case NodeKind::kOspfSetting: return kOspfItems;
    case NodeKind::kOspfInterfaceSetting: return kOspfInterfaceItems;
    case NodeKind::kOspfVirtualLink: return kVirtualLinkItems;
    case NodeKind::kClient: return kClientItems;
    case NodeKind::kEthernetType: return kEthernetTypeItems;
    case NodeKind::kAccessList: return kAccessListItems;
    case NodeKind::kLink: return kLinkItems;
  }
  return {};
}

bool IsLegalItem(NodeKind kind, std::string_view item) {
  auto items = LegalItems(kind);
  return std::find(items.begin(), items.end(), item) != items.end();
}

bool IsLegalAssociation(NodeKind a, NodeKind b) {
  if (ParentKind(a) == b || ParentKind(b) == a) return true;
  return (a == NodeKind::kLink && b == NodeKind::kEthernetSetting) ||
         (b == NodeKind::kLink && a == NodeKind::kEthernetSetting);
}

const std::string* NodeRecord::Field(std::string_view item) const {
  auto it = fields.find(item);
  return it == fields.end() ? nullptr : &it->second;
}

ModelGraph ModelGraph::Build(std::vector<NodeRecord> nodes,
                             std::vector<AssociationEdge> edges) {
  ModelGraph g;
  g.nodes_ = std::move(nodes);
  g.edges_ = std::move(edges);
  g.adjacency_.resize(g.nodes_.size());

  for (std::size_t i = 0; i < g.nodes_.size(); ++i) {
    const NodeRecord& node = g.nodes_[i];
    if (node.name.empty()) {
      throw SchemaError(std::string(KindName(node.kind)) +
                        " node with an empty value name");
    }
    if (!g.index_.emplace(node.name, i).second) {
      throw SchemaError("duplicate value name '" + node.name + "'");
    }
    for (const auto& [item, value] : node.fields) {
      if (!IsLegalItem(node.kind, item)) {
        throw SchemaError("node '" + node.name + "': item '" + item +
                          "' is not defined for " +
                          std::string(KindName(node.kind)));
      }
    }
  }

  std::set<std::pair<std::string, std::string>> seen;
  for (const AssociationEdge& e : g.edges_) {
    auto ia = g.index_.find(e.a);
    auto ib = g.index_.find(e.b);
    if (ia == g.index_.end() || ib == g.index_.end()) {
      throw SchemaError(EdgeLabel(e) + ": endpoint '" +
                        (ia == g.index_.end() ? e.a : e.b) +
                        "' does not exist");
    }
    if (ia->second == ib->second) {
      throw SchemaError(EdgeLabel(e) + ": self association");
    }
    const NodeKind ka = g.nodes_[ia->second].kind;
    const NodeKind kb = g.nodes_[ib->second].kind;
    if (!IsLegalAssociation(ka, kb)) {
      throw SchemaError(EdgeLabel(e) + ": " + std::string(KindName(ka)) +
                        " and " + std::string(KindName(kb)) +
                        " cannot be associated");
    }
    auto key = std::minmax(e.a, e.b);
    if (!seen.emplace(key.first, key.second).second) {
      throw SchemaError(EdgeLabel(e) + ": duplicate association");
    }
    g.adjacency_[ia->second].push_back(ib->second);
    g.adjacency_[ib->second].push_back(ia->second);
  }

  for (std::size_t i = 0; i < g.nodes_.size(); ++i) {
    const NodeRecord& node = g.nodes_[i];
    auto count = [&](NodeKind kind) {
      return std::count_if(
          g.adjacency_[i].begin(), g.adjacency_[i].end(),
          [&](std::size_t j) { return g.nodes_[j].kind == kind; });
    };
    if (node.kind == NodeKind::kLink &&
        count(NodeKind::kEthernetSetting) != 2) {
      throw SchemaError("Link '" + node.name +
                        "' must join exactly two EthernetSetting nodes, has " +
                        std::to_string(count(NodeKind::kEthernetSetting)));
    }
    if (node.kind == NodeKind::kConfig && count(NodeKind::kHostName) != 1) {
      throw SchemaError("Config '" + node.name +
                        "' must have exactly one HostName, has " +
                        std::to_string(count(NodeKind::kHostName)));
    }
    if (node.kind == NodeKind::kEthernetSetting &&
        count(NodeKind::kLink) > 1) {
      throw SchemaError("EthernetSetting '" + node.name +
                        "' is attached to more than one Link");
    }
    // EthernetType may be shared by the ports of one device; every other
    // owned kind has a single owner.
    auto parent = ParentKind(node.kind);
    if (parent && node.kind != NodeKind::kEthernetType && count(*parent) > 1) {
      throw SchemaError(std::string(KindName(node.kind)) + " '" + node.name +
                        "' has more than one owning " +
                        std::string(KindName(*parent)));
    }
  }
  return g;
}

const NodeRecord* ModelGraph::Find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  return it == index_.end() ? nullptr : &nodes_[it->second];
}

const NodeRecord& ModelGraph::At(std::string_view name) const {
  const NodeRecord* node = Find(name);
  if (node == nullptr) throw UnknownNode(std::string(name));
  return *node;
}

std::vector<const NodeRecord*> ModelGraph::NodesOfKind(NodeKind kind) const {
  std::vector<const NodeRecord*> out;
  for (const NodeRecord& n : nodes_) {
    if (n.kind == kind) out.push_back(&n);
  }
  return out;
}

std::vector<const NodeRecord*> ModelGraph::Neighbors(std::string_view name,
                                                     NodeKind kind) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) throw UnknownNode(std::string(name));
  std::vector<const NodeRecord*> out;
  for (std::size_t j : adjacency_[it->second]) {
    if (nodes_[j].kind == kind) out.push_back(&nodes_[j]);
  }
  return out;
}

const NodeRecord* ModelGraph::FindConfigOf(std::string_view name) const {
  const NodeRecord* node = &At(name);
  // Ownership chains are at most three deep (Client -> EthernetSetting ->
  // Config); the bound guards against malformed cycles.
  for (int depth = 0; depth < 4; ++depth) {
    if (node->kind == NodeKind::kConfig) return node;
    auto parent = ParentKind(node->kind);
    if (!parent) return nullptr;
    auto owners = Neighbors(node->name, *parent);
    if (owners.empty()) return nullptr;
    node = owners.front();
  }
  return nullptr;
}

const NodeRecord& ModelGraph::ConfigOf(std::string_view name) const {
  const NodeRecord* config = FindConfigOf(name);
  if (config == nullptr) throw OrphanError(std::string(name));
  return *config;
}

std::string ModelGraph::HostNameOf(const NodeRecord& config) const {
  for (const NodeRecord* hn : Neighbors(config.name, NodeKind::kHostName)) {
    if (const std::string* v = hn->Field("name")) return *v;
  }
  return config.name;
}

bool StructurallyEqual(const ModelGraph& a, const ModelGraph& b) {
  if (a.nodes().size() != b.nodes().size() ||
      a.edges().size() != b.edges().size()) {
    return false;
  }
  for (const NodeRecord& n : a.nodes()) {
    const NodeRecord* m = b.Find(n.name);
    if (m == nullptr || !(*m == n)) return false;
  }
  auto edge_set = [](const ModelGraph& g) {
    std::set<std::pair<std::string, std::string>> s;
    for (const AssociationEdge& e : g.edges()) s.insert(std::minmax(e.a, e.b));
    return s;
  };
  return edge_set(a) == edge_set(b);
}

ModelGraph ParseModel(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("malformed model document: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("model document must be an object");

  std::vector<NodeRecord> nodes;
  std::vector<AssociationEdge> edges;
  if (doc.contains("nodes")) {
    if (!doc["nodes"].is_array()) throw SchemaError("'nodes' must be an array");
    for (const json& jn : doc["nodes"]) {
      if (!jn.is_object() || !jn.contains("kind") || !jn.contains("name") ||
          !jn["kind"].is_string() || !jn["name"].is_string()) {
        throw SchemaError("node entries need string 'kind' and 'name': " +
                          jn.dump());
      }
      const std::string kind_name = jn["kind"].get<std::string>();
      const std::string name = jn["name"].get<std::string>();
      auto kind = ParseNodeKind(kind_name);
      if (!kind) {
        throw SchemaError("node '" + name + "': unknown kind '" + kind_name +
                          "'");
      }
      NodeRecord record{*kind, name, {}};
      if (jn.contains("fields")) {
        if (!jn["fields"].is_object()) {
          throw SchemaError("node '" + name + "': 'fields' must be an object");
        }
        for (const auto& [item, value] : jn["fields"].items()) {
          // Values are data, never structure: non-string scalars are kept as
          // their literal JSON text.
          if (value.is_string()) {
            record.fields[item] = value.get<std::string>();
          } else if (value.is_primitive() && !value.is_null()) {
            record.fields[item] = value.dump();
          } else {
            throw SchemaError("node '" + name + "': item '" + item +
                              "' must be a scalar");
          }
        }
      }
      nodes.push_back(std::move(record));
    }
  }
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw SchemaError("'edges' must be an array");
    for (const json& je : doc["edges"]) {
      if (!je.is_array() || je.size() != 2 || !je[0].is_string() ||
          !je[1].is_string()) {
        throw SchemaError("edge entries must be [name, name] pairs: " +
                          je.dump());
      }
      edges.push_back({je[0].get<std::string>(), je[1].get<std::string>()});
    }
  }
  return ModelGraph::Build(std::move(nodes), std::move(edges));
}

ModelGraph LoadModel(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot read model file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw FileError("error reading model file " + path.string());
  return ParseModel(buffer.str());
}

std::string SerializeModel(const ModelGraph& graph) {
  json doc;
  doc["nodes"] = json::array();
  for (const NodeRecord& n : graph.nodes()) {
    json jn;
    jn["kind"] = std::string(KindName(n.kind));
    jn["name"] = n.name;
    jn["fields"] = json::object();
    // Metamodel order keeps the files diffable.
    for (std::string_view item : LegalItems(n.kind)) {
      if (const std::string* v = n.Field(item)) jn["fields"][item] = *v;
    }
    doc["nodes"].push_back(std::move(jn));
  }
  doc["edges"] = json::array();
  for (const AssociationEdge& e : graph.edges()) {
    doc["edges"].push_back(json::array({e.a, e.b}));
  }
  return doc.dump(2) + "\n";
}

void SaveModel(const ModelGraph& graph, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileError("cannot write model file " + path.string());
  out << SerializeModel(graph);
  if (!out) throw FileError("error writing model file " + path.string());
}

namespace {

struct TypePrefix {
  std::string_view item;
  std::string_view long_name;
  std::string_view short_name;
};

constexpr std::array<TypePrefix, 4> kTypePrefixes = {{
    {"fastEthernet", "FastEthernet", "Fa"},
    {"Ethernet", "Ethernet", "Et"},
    {"gigabitEthernet", "GigabitEthernet", "Gi"},
    {"10gigabitEthernet", "TenGigabitEthernet", "Te"},
}};

const TypePrefix& PrefixFor(const ModelGraph& graph,
                            const NodeRecord& ethernet) {
  for (const NodeRecord* type :
       graph.Neighbors(ethernet.name, NodeKind::kEthernetType)) {
    for (const TypePrefix& p : kTypePrefixes) {
      const std::string* flag = type->Field(p.item);
      if (flag != nullptr && *flag == "true") return p;
    }
  }
  return kTypePrefixes[1];
}

std::string PortSuffix(const NodeRecord& ethernet) {
  const std::string* stack = ethernet.Field("stack");
  const std::string* slot = ethernet.Field("slot");
  const std::string* port = ethernet.Field("port");
  std::string p = port ? *port : "?";
  if (stack == nullptr && slot == nullptr) return p;
  return (stack ? *stack : "0") + "/" + (slot ? *slot : "0") + "/" + p;
}

}  // namespace

std::string InterfaceName(const ModelGraph& graph,
                          const NodeRecord& ethernet) {
  return std::string(PrefixFor(graph, ethernet).long_name) +
         PortSuffix(ethernet);
}

std::string ShortInterfaceName(const ModelGraph& graph,
                               const NodeRecord& ethernet) {
  return std::string(PrefixFor(graph, ethernet).short_name) +
         PortSuffix(ethernet);
}

std::vector<TopologyEdge> ExportTopology(const ModelGraph& graph) {
  std::vector<TopologyEdge> out;
  for (const NodeRecord* link : graph.NodesOfKind(NodeKind::kLink)) {
    auto ends = graph.Neighbors(link->name, NodeKind::kEthernetSetting);
    auto endpoint = [&](const NodeRecord* es) {
      const NodeRecord& config = graph.ConfigOf(es->name);
      return TopologyEndpoint{graph.HostNameOf(config),
                              InterfaceName(graph, *es)};
    };
    out.push_back({endpoint(ends.at(0)), endpoint(ends.at(1))});
  }
  return out;
}

std::string TopologyToJson(std::span<const TopologyEdge> edges) {
  json doc;
  doc["edges"] = json::array();
  for (const TopologyEdge& e : edges) {
    auto end = [](const TopologyEndpoint& ep) {
      json j;
      j["hostName"] = ep.host_name;
      j["interfaceName"] = ep.interface_name;
      return j;
    };
    json je;
    je["node1"] = end(e.node1);
    je["node2"] = end(e.node2);
    doc["edges"].push_back(std::move(je));
  }
  return doc.dump(2) + "\n";
}

}  // namespace ncverify
