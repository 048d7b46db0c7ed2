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

#ifndef NCVERIFY_OSPF_CHECKS_H_
#define NCVERIFY_OSPF_CHECKS_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ncverify/ipv4.h"
#include "ncverify/model.h"
#include "ncverify/violation.h"

namespace ncverify {

inline constexpr int kDefaultHello = 10;
inline constexpr int kDefaultDead = 40;
inline constexpr int kDefaultPriority = 1;
inline constexpr int kDefaultMtu = 1500;

// An addressed interface (SVI or routed port) enabled for OSPF by a network
// statement of its own device.
struct OspfInterfaceBinding {
  std::string config;
  std::string interface;  // VlanSetting or EthernetSetting
  std::string ois;        // OspfInterfaceSetting
  std::string ospf;       // OspfSetting owning the statement
  Ipv4 ip;
  std::optional<Prefix> subnet;
  int area = 0;
  int hello = kDefaultHello;
  int dead = kDefaultDead;
  int priority = kDefaultPriority;
};

struct OspfBindings {
  std::vector<OspfInterfaceBinding> bindings;
  // OSPF.1 (addressed interface without a statement) and OSPF.7 (statement
  // matching no interface).
  std::vector<Violation> violations;

  const OspfInterfaceBinding* Of(std::string_view interface) const;
};

// Each addressed interface binds to the matching statement with the fewest
// wildcard bits, ties broken by statement name.
OspfBindings BindOspf(const ModelGraph& graph);

// Interfaces an OSPF adjacency would form over on a Link: the two ports when
// both are routed, a routed port and the SVI of the access VLAN it faces,
// or the SVI pair of every VLAN both ends carry.
std::vector<std::pair<const NodeRecord*, const NodeRecord*>> L3Pairs(
    const ModelGraph& graph, const NodeRecord& a, const NodeRecord& b);

// OSPF.3 area, OSPF.4 subnet, OSPF.5 hello, OSPF.6 dead, OSPF.10 mtu
// mismatches and OSPF.9 (one side of an adjacency not enabled).
std::vector<Violation> CheckNeighborConsistency(const ModelGraph& graph,
                                                const OspfBindings& bindings);

// OSPF.2: one violation per router id shared by several OspfSettings.
std::vector<Violation> CheckRouterIds(const ModelGraph& graph);

// Backbone reachability. A router is on the backbone when it has an area-0
// interface or a usable virtual link to a backbone router; a virtual link is
// usable when at least one end configures it, both routers are enabled in
// the transit area, and the named router id exists.
struct BackboneAnalysis {
  bool has_area0 = false;
  std::set<int> areas;
  std::set<std::string> backbone_routers;  // OspfSetting names
  std::map<int, std::set<std::string>> routers_in_area;
  std::set<int> disconnected;  // every area when area 0 is missing
};
BackboneAnalysis AnalyzeBackbone(const ModelGraph& graph,
                                 const OspfBindings& bindings);

// OSPF.8 per disconnected area; OSPF.12 instead when area 0 is missing and
// OSPF.12 is enabled; OSPF.11 per one-sided virtual link.
std::vector<Violation> CheckBackbone(const ModelGraph& graph,
                                     const OspfBindings& bindings,
                                     const RuleFilter& filter = {});

// Every OSPF check, filtered and sorted.
std::vector<Violation> CheckOspf(const ModelGraph& graph,
                                 const RuleFilter& filter = {});

}  // namespace ncverify

#endif  // NCVERIFY_OSPF_CHECKS_H_
