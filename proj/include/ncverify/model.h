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

#ifndef NCVERIFY_MODEL_H_
#define NCVERIFY_MODEL_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ncverify {

// The fourteen specification item groups of the metamodel.
enum class NodeKind {
  kConfig,
  kHostName,
  kEthernetSetting,
  kVlan,
  kVlanSetting,
  kStpSetting,
  kIpRoute,
  kOspfSetting,
  kOspfInterfaceSetting,
  kOspfVirtualLink,
  kClient,
  kEthernetType,
  kAccessList,
  kLink,
};

std::span<const NodeKind> AllNodeKinds();
std::string_view KindName(NodeKind kind);
std::optional<NodeKind> ParseNodeKind(std::string_view name);

// Specification items legal for `kind`, in metamodel order.
std::span<const std::string_view> LegalItems(NodeKind kind);
bool IsLegalItem(NodeKind kind, std::string_view item);

// True when the metamodel has a relationship between the two groups.
// Symmetric.
bool IsLegalAssociation(NodeKind a, NodeKind b);

// Raw configuration values keyed by item name. An item that is not in the
// map is absent; an item mapped to "" was authored empty.
using FieldMap = std::map<std::string, std::string, std::less<>>;

struct NodeRecord {
  NodeKind kind;
  std::string name;
  FieldMap fields;

  // nullptr when the item is absent.
  const std::string* Field(std::string_view item) const;
  bool Has(std::string_view item) const { return Field(item) != nullptr; }

  friend bool operator==(const NodeRecord&, const NodeRecord&) = default;
};

struct AssociationEdge {
  std::string a;
  std::string b;

  friend bool operator==(const AssociationEdge&,
                         const AssociationEdge&) = default;
};

// Immutable typed graph instantiating the metamodel. Construct through
// ModelGraph::Build (or the loader), which enforces every structural
// invariant; node and edge order is preserved as authored.
class ModelGraph {
 public:
  ModelGraph() = default;

  // Throws SchemaError naming the offending entity.
  static ModelGraph Build(std::vector<NodeRecord> nodes,
                          std::vector<AssociationEdge> edges);

  const std::vector<NodeRecord>& nodes() const { return nodes_; }
  const std::vector<AssociationEdge>& edges() const { return edges_; }
  bool empty() const { return nodes_.empty(); }

  const NodeRecord* Find(std::string_view name) const;
  // Throws UnknownNode.
  const NodeRecord& At(std::string_view name) const;

  std::vector<const NodeRecord*> NodesOfKind(NodeKind kind) const;

  // Nodes of `kind` joined to `name` by one association edge, in edge order.
  // Throws UnknownNode.
  std::vector<const NodeRecord*> Neighbors(std::string_view name,
                                           NodeKind kind) const;

  // The Config owning `name`, following the ownership chain (for example
  // OspfInterfaceSetting -> OspfSetting -> Config). A Config owns itself.
  // Throws UnknownNode, or OrphanError when no Config is reachable.
  const NodeRecord& ConfigOf(std::string_view name) const;
  const NodeRecord* FindConfigOf(std::string_view name) const;

  // HostName.name of the Config, or the Config's value name when unset.
  std::string HostNameOf(const NodeRecord& config) const;

 private:
  std::vector<NodeRecord> nodes_;
  std::vector<AssociationEdge> edges_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

// Same node set (name, kind, fields) and same undirected edge set,
// irrespective of order.
bool StructurallyEqual(const ModelGraph& a, const ModelGraph& b);

// Model file format (JSON):
//   {"nodes": [{"kind": "Config", "name": "campus1", "fields": {...}}, ...],
//    "edges": [["campus1", "campus1_HN"], ...]}
// Field values are kept verbatim. Throws SchemaError on malformed documents.
ModelGraph ParseModel(std::string_view text);
// Throws FileError when unreadable, SchemaError otherwise.
ModelGraph LoadModel(const std::filesystem::path& path);
std::string SerializeModel(const ModelGraph& graph);
void SaveModel(const ModelGraph& graph, const std::filesystem::path& path);

// Device-style interface name of an EthernetSetting: the EthernetType prefix
// followed by port, or stack/slot/port when stack or slot is set
// ("FastEthernet2", "GigabitEthernet1/0/3").
std::string InterfaceName(const ModelGraph& graph, const NodeRecord& ethernet);
// Abbreviated form used in tables ("Fa2").
std::string ShortInterfaceName(const ModelGraph& graph,
                               const NodeRecord& ethernet);

struct TopologyEndpoint {
  std::string host_name;
  std::string interface_name;

  friend bool operator==(const TopologyEndpoint&,
                         const TopologyEndpoint&) = default;
};

struct TopologyEdge {
  TopologyEndpoint node1;
  TopologyEndpoint node2;

  friend bool operator==(const TopologyEdge&, const TopologyEdge&) = default;
};

// One entry per Link node, in model order. Throws OrphanError when a linked
// EthernetSetting has no Config.
std::vector<TopologyEdge> ExportTopology(const ModelGraph& graph);
// {"edges": [{"node1": {"hostName": ..., "interfaceName": ...}, ...}]}
std::string TopologyToJson(std::span<const TopologyEdge> edges);

}  // namespace ncverify

#endif  // NCVERIFY_MODEL_H_
