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

#ifndef NCVERIFY_SEGMENTS_H_
#define NCVERIFY_SEGMENTS_H_

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ncverify/ipv4.h"
#include "ncverify/model.h"

namespace ncverify {

// "1,40,100-102" -> {1, 40, 100, 101, 102}. Malformed tokens are skipped;
// lexical validity is the rule engine's concern.
std::set<int> ParseVlanList(std::string_view text);
std::optional<int> ParseInt(const std::string* text);

enum class PortMode { kRouted, kAccess, kTrunk };

// Explicit mode, else access when accessVlan is set, else routed.
PortMode ModeOf(const NodeRecord& ethernet);
bool IsShutdown(const NodeRecord& node);

// Vlan.num values defined under a Config.
std::set<int> DefinedVlans(const ModelGraph& graph, const NodeRecord& config);

// VLANs an EthernetSetting forwards: accessVlan on access ports, allowedVlan
// on trunks (all defined VLANs when allowedVlan is absent). Empty for routed
// or shut-down ports.
std::set<int> CarriedVlans(const ModelGraph& graph, const NodeRecord& ethernet);

// The two EthernetSetting ends of a Link, in authored order.
struct LinkEnds {
  const NodeRecord* link;
  const NodeRecord* a;
  const NodeRecord* b;
};
std::vector<LinkEnds> Links(const ModelGraph& graph);
// nullptr when the port is not cabled.
const NodeRecord* LinkOf(const ModelGraph& graph, const NodeRecord& ethernet);

struct SegmentMember {
  std::string config;
  std::string node;  // EthernetSetting, VlanSetting or Client

  friend auto operator<=>(const SegmentMember&,
                          const SegmentMember&) = default;
};

// A maximal set of interfaces reachable at layer 2 through Config,
// EthernetSetting and Link nodes, crossing a Link only when both ends carry
// the VLAN. Routed-port segments have no VLAN.
struct L2Segment {
  std::optional<int> vlan;
  std::set<SegmentMember> members;

  std::set<std::string> Configs() const;
};

class SegmentIndex {
 public:
  explicit SegmentIndex(const ModelGraph& graph);

  // Ordered by (vlan, first member).
  const std::vector<L2Segment>& segments() const { return segments_; }

  std::optional<std::size_t> SegmentOfVlan(std::string_view config,
                                           int vlan) const;
  // Segment of a VlanSetting, routed EthernetSetting or Client.
  std::optional<std::size_t> SegmentOfNode(std::string_view node) const;

 private:
  std::map<std::pair<std::string, int>, std::size_t, std::less<>> by_vlan_;
  std::map<std::string, std::size_t, std::less<>> by_node_;
  std::vector<L2Segment> segments_;
};

std::vector<L2Segment> DiscoverSegments(const ModelGraph& graph);

// An assigned IPv4 address in the model.
struct InterfaceAddress {
  std::string owner;
  std::string config;
  NodeKind source_kind;
  Ipv4 ip;
  std::string ip_text;
  std::string ip_item;
  std::optional<int> prefix_length;
  std::string mask_item;
  std::string mask_text;
  std::optional<std::size_t> segment;

  std::optional<Prefix> Network() const;
};

// Addresses on EthernetSettings, VlanSettings (SVIs), Clients, and host-form
// OspfInterfaceSettings (wildcard 0.0.0.0) that do not just restate an
// interface address of their own device. Wider network statements denote
// ranges, not assignments, and are not collected. Unparseable values are
// skipped.
std::vector<InterfaceAddress> CollectAddresses(const ModelGraph& graph,
                                               const SegmentIndex& segments);

// Device-style name of an L3 interface: "Vlan20" for a VlanSetting,
// InterfaceName for an EthernetSetting.
std::string L3InterfaceName(const ModelGraph& graph, const NodeRecord& node);

// The VlanSetting (SVI) of `config` for `vlan`, or nullptr.
const NodeRecord* SviFor(const ModelGraph& graph, const NodeRecord& config,
                         int vlan);

}  // namespace ncverify

#endif  // NCVERIFY_SEGMENTS_H_
