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

#include "ncverify/ospf_checks.h"

#include <algorithm>
#include <bit>
#include <queue>

#include "ncverify/segments.h"

namespace ncverify {
namespace {

std::string FieldOr(const NodeRecord& node, std::string_view item,
                    std::string fallback = "") {
  const std::string* v = node.Field(item);
  return v == nullptr ? fallback : *v;
}

Culprit CulpritOf(const NodeRecord& node, std::string_view item) {
  return {node.name, std::string(item), FieldOr(node, item)};
}

// "campus1 Vlan20"
std::string Describe(const ModelGraph& graph, const NodeRecord& node) {
  const NodeRecord* config = graph.FindConfigOf(node.name);
  std::string host = config ? graph.HostNameOf(*config) : node.name;
  return host + " " + L3InterfaceName(graph, node);
}

std::string JoinNames(const std::vector<std::string>& names) {
  std::string out;
  for (const std::string& n : names) {
    if (!out.empty()) out += ", ";
    out += n;
  }
  return out;
}

bool IsAddressedInterface(const NodeRecord& node) {
  if (!node.Has("ipAddress")) return false;
  if (node.kind == NodeKind::kVlanSetting) return true;
  return node.kind == NodeKind::kEthernetSetting &&
         ModeOf(node) == PortMode::kRouted;
}

std::optional<Prefix> SubnetOf(const NodeRecord& node) {
  auto ip = Ipv4::Parse(FieldOr(node, "ipAddress"));
  auto mask = Ipv4::Parse(FieldOr(node, "subnetMask"));
  if (!ip || !mask) return std::nullopt;
  auto length = MaskPrefixLength(*mask);
  if (!length) return std::nullopt;
  return Prefix::Of(*ip, *length);
}

struct Statement {
  const NodeRecord* ois;
  const NodeRecord* ospf;
  Ipv4 network;
  Ipv4 wildcard;
};

std::vector<Statement> StatementsOf(const ModelGraph& graph,
                                    const NodeRecord& config) {
  std::vector<Statement> out;
  for (const NodeRecord* ospf :
       graph.Neighbors(config.name, NodeKind::kOspfSetting)) {
    for (const NodeRecord* ois :
         graph.Neighbors(ospf->name, NodeKind::kOspfInterfaceSetting)) {
      auto network = Ipv4::Parse(FieldOr(*ois, "ipAddress"));
      auto wildcard = Ipv4::Parse(FieldOr(*ois, "wildcardMask"));
      if (network && wildcard) out.push_back({ois, ospf, *network, *wildcard});
    }
  }
  return out;
}

}  // namespace

const OspfInterfaceBinding* OspfBindings::Of(std::string_view interface) const {
  for (const OspfInterfaceBinding& b : bindings) {
    if (b.interface == interface) return &b;
  }
  return nullptr;
}

OspfBindings BindOspf(const ModelGraph& graph) {
  OspfBindings out;
  for (const NodeRecord* config : graph.NodesOfKind(NodeKind::kConfig)) {
    if (graph.Neighbors(config->name, NodeKind::kOspfSetting).empty()) continue;
    std::vector<Statement> statements = StatementsOf(graph, *config);
    std::set<std::string> used;
    for (const NodeRecord& node : graph.nodes()) {
      if (!IsAddressedInterface(node)) continue;
      const NodeRecord* owner = graph.FindConfigOf(node.name);
      if (owner == nullptr || owner->name != config->name) continue;
      auto ip = Ipv4::Parse(FieldOr(node, "ipAddress"));
      if (!ip) continue;
      const Statement* best = nullptr;
      for (const Statement& s : statements) {
        if (!WildcardMatches(s.network, s.wildcard, *ip)) continue;
        if (best == nullptr) {
          best = &s;
          continue;
        }
        int bits = std::popcount(s.wildcard.bits());
        int best_bits = std::popcount(best->wildcard.bits());
        if (bits < best_bits ||
            (bits == best_bits && s.ois->name < best->ois->name)) {
          best = &s;
        }
      }
      if (best == nullptr) {
        out.violations.push_back(
            {"OSPF.1", Severity::kError,
             "OSPF is not enabled on " + Describe(graph, node) + " (" +
                 ip->ToString() + "): no network statement covers it",
             {CulpritOf(node, "ipAddress")}});
        continue;
      }
      used.insert(best->ois->name);
      OspfInterfaceBinding b;
      b.config = config->name;
      b.interface = node.name;
      b.ois = best->ois->name;
      b.ospf = best->ospf->name;
      b.ip = *ip;
      b.subnet = SubnetOf(node);
      b.area = ParseInt(best->ois->Field("areaId")).value_or(-1);
      b.hello = ParseInt(best->ois->Field("helloInterval")).value_or(kDefaultHello);
      b.dead = ParseInt(best->ois->Field("deadInterval")).value_or(kDefaultDead);
      b.priority =
          ParseInt(best->ois->Field("priority")).value_or(kDefaultPriority);
      out.bindings.push_back(std::move(b));
    }
    for (const Statement& s : statements) {
      if (used.contains(s.ois->name)) continue;
      out.violations.push_back(
          {"OSPF.7", Severity::kError,
           "Area " + FieldOr(*s.ois, "areaId") + " is assigned to network " +
               s.network.ToString() + " " + s.wildcard.ToString() +
               ", which no interface of " + graph.HostNameOf(*config) +
               " uses",
           {CulpritOf(*s.ois, "ipAddress")}});
    }
  }
  return out;
}

std::vector<std::pair<const NodeRecord*, const NodeRecord*>> L3Pairs(
    const ModelGraph& graph, const NodeRecord& a, const NodeRecord& b) {
  std::vector<std::pair<const NodeRecord*, const NodeRecord*>> out;
  if (IsShutdown(a) || IsShutdown(b)) return out;
  const NodeRecord* ca = graph.FindConfigOf(a.name);
  const NodeRecord* cb = graph.FindConfigOf(b.name);
  if (ca == nullptr || cb == nullptr) return out;
  const bool ra = ModeOf(a) == PortMode::kRouted;
  const bool rb = ModeOf(b) == PortMode::kRouted;
  if (ra && rb) {
    out.emplace_back(&a, &b);
    return out;
  }
  if (ra || rb) {
    const NodeRecord& other = ra ? b : a;
    if (ModeOf(other) != PortMode::kAccess) return out;
    auto vlan = ParseInt(other.Field("accessVlan"));
    const NodeRecord* svi = vlan ? SviFor(graph, ra ? *cb : *ca, *vlan) : nullptr;
    if (svi == nullptr) return out;
    if (ra) out.emplace_back(&a, svi);
    else out.emplace_back(svi, &b);
    return out;
  }
  std::set<int> va = CarriedVlans(graph, a);
  for (int v : CarriedVlans(graph, b)) {
    if (!va.contains(v)) continue;
    const NodeRecord* sa = SviFor(graph, *ca, v);
    const NodeRecord* sb = SviFor(graph, *cb, v);
    if (sa != nullptr && sb != nullptr) out.emplace_back(sa, sb);
  }
  return out;
}

std::vector<Violation> CheckNeighborConsistency(const ModelGraph& graph,
                                                const OspfBindings& bindings) {
  std::vector<Violation> out;
  for (const LinkEnds& link : Links(graph)) {
    bool adjacency = false;
    for (auto [ia, ib] : L3Pairs(graph, *link.a, *link.b)) {
      const OspfInterfaceBinding* ba = bindings.Of(ia->name);
      const OspfInterfaceBinding* bb = bindings.Of(ib->name);
      if (ba == nullptr && bb == nullptr) continue;
      if (ba == nullptr || bb == nullptr) {
        const NodeRecord* missing = ba == nullptr ? ia : ib;
        const NodeRecord* present = ba == nullptr ? ib : ia;
        out.push_back({"OSPF.9", Severity::kError,
                       "OSPF is enabled on " + Describe(graph, *present) +
                           " but not on its neighbor " +
                           Describe(graph, *missing),
                       {CulpritOf(*missing, "ipAddress")}});
        continue;
      }
      adjacency = true;
      const NodeRecord& oa = graph.At(ba->ois);
      const NodeRecord& ob = graph.At(bb->ois);
      if (ba->area != bb->area) {
        out.push_back({"OSPF.3", Severity::kError,
                       "Area IDs of " + oa.name + " and " + ob.name +
                           " do not match",
                       {CulpritOf(oa, "areaId"), CulpritOf(ob, "areaId")}});
      }
      if (ba->subnet && bb->subnet && *ba->subnet != *bb->subnet) {
        out.push_back({"OSPF.4", Severity::kError,
                       "Subnets of " + Describe(graph, *ia) + " (" +
                           ba->subnet->ToString() + ") and " +
                           Describe(graph, *ib) + " (" +
                           bb->subnet->ToString() + ") do not match",
                       {CulpritOf(*ia, "ipAddress"), CulpritOf(*ia, "subnetMask"),
                        CulpritOf(*ib, "ipAddress"),
                        CulpritOf(*ib, "subnetMask")}});
      }
      if (ba->hello != bb->hello) {
        out.push_back({"OSPF.5", Severity::kError,
                       "Hello intervals of " + oa.name + " (" +
                           std::to_string(ba->hello) + ") and " + ob.name +
                           " (" + std::to_string(bb->hello) +
                           ") do not match",
                       {CulpritOf(oa, "helloInterval"),
                        CulpritOf(ob, "helloInterval")}});
      }
      if (ba->dead != bb->dead) {
        out.push_back({"OSPF.6", Severity::kError,
                       "Dead intervals of " + oa.name + " (" +
                           std::to_string(ba->dead) + ") and " + ob.name +
                           " (" + std::to_string(bb->dead) + ") do not match",
                       {CulpritOf(oa, "deadInterval"),
                        CulpritOf(ob, "deadInterval")}});
      }
    }
    if (!adjacency) continue;
    int mtu_a = ParseInt(link.a->Field("mtu")).value_or(kDefaultMtu);
    int mtu_b = ParseInt(link.b->Field("mtu")).value_or(kDefaultMtu);
    if (mtu_a != mtu_b) {
      out.push_back({"OSPF.10", Severity::kError,
                     "MTU mismatch: " + std::to_string(mtu_a) + " on " +
                         Describe(graph, *link.a) + ", " +
                         std::to_string(mtu_b) + " on " +
                         Describe(graph, *link.b),
                     {CulpritOf(*link.a, "mtu"), CulpritOf(*link.b, "mtu")}});
    }
  }
  return out;
}

std::vector<Violation> CheckRouterIds(const ModelGraph& graph) {
  std::map<std::string, std::vector<const NodeRecord*>> by_id;
  for (const NodeRecord* ospf : graph.NodesOfKind(NodeKind::kOspfSetting)) {
    if (const std::string* id = ospf->Field("routerId")) {
      by_id[*id].push_back(ospf);
    }
  }
  std::vector<Violation> out;
  for (const auto& [id, settings] : by_id) {
    if (settings.size() < 2) continue;
    std::vector<Culprit> culprits;
    std::vector<std::string> hosts;
    for (const NodeRecord* s : settings) {
      culprits.push_back(CulpritOf(*s, "routerId"));
      const NodeRecord* config = graph.FindConfigOf(s->name);
      hosts.push_back(config ? graph.HostNameOf(*config) : s->name);
    }
    out.push_back({"OSPF.2", Severity::kError,
                   "Router ID " + id + " is used by " + JoinNames(hosts),
                   std::move(culprits)});
  }
  return out;
}

namespace {

struct VirtualLink {
  const NodeRecord* node;
  const NodeRecord* router;  // OspfSetting configuring it
  int transit;
  std::string peer_id;
};

std::vector<VirtualLink> VirtualLinks(const ModelGraph& graph) {
  std::vector<VirtualLink> out;
  for (const NodeRecord* vl : graph.NodesOfKind(NodeKind::kOspfVirtualLink)) {
    auto owners = graph.Neighbors(vl->name, NodeKind::kOspfSetting);
    auto transit = ParseInt(vl->Field("areaId"));
    if (owners.empty() || !transit) continue;
    out.push_back({vl, owners.front(), *transit, FieldOr(*vl, "routerId")});
  }
  return out;
}

std::map<std::string, std::vector<const NodeRecord*>> RoutersById(
    const ModelGraph& graph) {
  std::map<std::string, std::vector<const NodeRecord*>> out;
  for (const NodeRecord* ospf : graph.NodesOfKind(NodeKind::kOspfSetting)) {
    if (const std::string* id = ospf->Field("routerId")) {
      out[*id].push_back(ospf);
    }
  }
  return out;
}

}  // namespace

BackboneAnalysis AnalyzeBackbone(const ModelGraph& graph,
                                 const OspfBindings& bindings) {
  BackboneAnalysis out;
  for (const OspfInterfaceBinding& b : bindings.bindings) {
    out.areas.insert(b.area);
    out.routers_in_area[b.area].insert(b.ospf);
  }
  out.has_area0 = out.areas.contains(0);

  std::map<std::string, std::set<std::string>> adjacent;
  auto by_id = RoutersById(graph);
  for (const VirtualLink& vl : VirtualLinks(graph)) {
    const auto& in_transit = out.routers_in_area[vl.transit];
    if (!in_transit.contains(vl.router->name)) continue;
    auto peers = by_id.find(vl.peer_id);
    if (peers == by_id.end()) continue;
    for (const NodeRecord* peer : peers->second) {
      if (peer == vl.router || !in_transit.contains(peer->name)) continue;
      adjacent[vl.router->name].insert(peer->name);
      adjacent[peer->name].insert(vl.router->name);
    }
  }

  std::queue<std::string> frontier;
  for (const std::string& r : out.routers_in_area[0]) {
    if (out.backbone_routers.insert(r).second) frontier.push(r);
  }
  while (!frontier.empty()) {
    std::string r = frontier.front();
    frontier.pop();
    for (const std::string& next : adjacent[r]) {
      if (out.backbone_routers.insert(next).second) frontier.push(next);
    }
  }
  for (int area : out.areas) {
    if (area == 0) continue;
    const auto& routers = out.routers_in_area[area];
    bool connected = std::any_of(
        routers.begin(), routers.end(),
        [&](const std::string& r) { return out.backbone_routers.contains(r); });
    if (!connected) out.disconnected.insert(area);
  }
  // Erase empty entries created by lookups.
  std::erase_if(out.routers_in_area,
                [](const auto& entry) { return entry.second.empty(); });
  return out;
}

std::vector<Violation> CheckBackbone(const ModelGraph& graph,
                                     const OspfBindings& bindings,
                                     const RuleFilter& filter) {
  std::vector<Violation> out;
  BackboneAnalysis analysis = AnalyzeBackbone(graph, bindings);
  std::vector<VirtualLink> vls = VirtualLinks(graph);
  auto by_id = RoutersById(graph);

  if (!analysis.areas.empty() && !analysis.has_area0 &&
      filter.Enabled("OSPF.12")) {
    // Areas that look like a displaced backbone: no virtual link transits
    // them and some router in them has no virtual link at all.
    std::set<int> transit;
    std::set<std::string> vl_routers;
    for (const VirtualLink& vl : vls) {
      transit.insert(vl.transit);
      vl_routers.insert(vl.router->name);
    }
    std::set<int> candidates;
    for (const auto& [area, routers] : analysis.routers_in_area) {
      if (transit.contains(area)) continue;
      for (const std::string& r : routers) {
        if (!vl_routers.contains(r)) candidates.insert(area);
      }
    }
    std::vector<Culprit> culprits;
    for (const OspfInterfaceBinding& b : bindings.bindings) {
      if (candidates.contains(b.area)) {
        culprits.push_back(CulpritOf(graph.At(b.ois), "areaId"));
      }
    }
    std::sort(culprits.begin(), culprits.end());
    culprits.erase(std::unique(culprits.begin(), culprits.end()),
                   culprits.end());
    out.push_back({"OSPF.12", Severity::kError,
                   "Area 0 is not configured on any router",
                   std::move(culprits)});
  } else {
    for (int area : analysis.disconnected) {
      std::vector<Culprit> culprits;
      for (const std::string& r : analysis.routers_in_area[area]) {
        culprits.push_back(CulpritOf(graph.At(r), "routerId"));
      }
      out.push_back({"OSPF.8", Severity::kError,
                     "Area " + std::to_string(area) +
                         " is not connected to Area 0",
                     std::move(culprits)});
    }
  }

  for (const VirtualLink& vl : vls) {
    const std::string own_id = FieldOr(*vl.router, "routerId");
    bool reciprocal = false;
    auto peers = by_id.find(vl.peer_id);
    if (peers != by_id.end()) {
      for (const VirtualLink& other : vls) {
        if (other.transit == vl.transit && other.peer_id == own_id &&
            std::find(peers->second.begin(), peers->second.end(),
                      other.router) != peers->second.end()) {
          reciprocal = true;
        }
      }
    }
    if (reciprocal) continue;
    const NodeRecord* config = graph.FindConfigOf(vl.router->name);
    out.push_back({"OSPF.11", Severity::kError,
                   "Virtual link from " +
                       (config ? graph.HostNameOf(*config) : vl.router->name) +
                       " to " + vl.peer_id + " through area " +
                       std::to_string(vl.transit) +
                       " has no matching virtual link on the peer",
                   {CulpritOf(*vl.node, "routerId")}});
  }
  return out;
}

std::vector<Violation> CheckOspf(const ModelGraph& graph,
                                 const RuleFilter& filter) {
  OspfBindings bindings = BindOspf(graph);
  std::vector<Violation> out = bindings.violations;
  for (auto part : {CheckNeighborConsistency(graph, bindings),
                    CheckRouterIds(graph),
                    CheckBackbone(graph, bindings, filter)}) {
    out.insert(out.end(), part.begin(), part.end());
  }
  out = Filtered(std::move(out), filter);
  SortViolations(out);
  return out;
}

}  // namespace ncverify
