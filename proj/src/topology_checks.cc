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

#include "ncverify/topology_checks.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <string>

#include "ncverify/ipv4.h"

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

// "campus2 FastEthernet3"
std::string Describe(const ModelGraph& graph, const NodeRecord& ethernet) {
  const NodeRecord* config = graph.FindConfigOf(ethernet.name);
  std::string host = config ? graph.HostNameOf(*config) : ethernet.name;
  return host + " " + InterfaceName(graph, ethernet);
}

std::string JoinSet(const std::set<int>& values) {
  std::string out = "{";
  for (int v : values) {
    if (out.size() > 1) out += ",";
    out += std::to_string(v);
  }
  return out + "}";
}

std::string JoinNames(const std::vector<std::string>& names) {
  std::string out;
  for (const std::string& n : names) {
    if (!out.empty()) out += ", ";
    out += n;
  }
  return out;
}

std::set<int> EffectiveAllowed(const ModelGraph& graph,
                               const NodeRecord& ethernet) {
  const NodeRecord* config = graph.FindConfigOf(ethernet.name);
  if (config == nullptr) return {};
  std::set<int> defined = DefinedVlans(graph, *config);
  std::set<int> allowed = CarriedVlans(graph, ethernet);
  if (const std::string* text = ethernet.Field("allowedVlan")) {
    allowed = ParseVlanList(*text);  // shutdown does not change the config
  }
  std::set<int> out;
  std::set_intersection(allowed.begin(), allowed.end(), defined.begin(),
                        defined.end(), std::inserter(out, out.begin()));
  return out;
}

// Mismatch of an explicit speed/duplex setting. "auto" and absence never
// conflict.
bool ExplicitDiffers(const NodeRecord& a, const NodeRecord& b,
                     std::string_view item) {
  const std::string* va = a.Field(item);
  const std::string* vb = b.Field(item);
  if (va == nullptr || vb == nullptr) return false;
  if (*va == "auto" || *vb == "auto") return false;
  return *va != *vb;
}

}  // namespace

std::vector<Violation> CheckDuplicateIp(const ModelGraph& graph) {
  SegmentIndex segments(graph);
  std::vector<InterfaceAddress> addresses = CollectAddresses(graph, segments);
  std::map<std::uint32_t, std::vector<const InterfaceAddress*>> by_ip;
  for (const InterfaceAddress& a : addresses) by_ip[a.ip.bits()].push_back(&a);

  std::vector<Violation> out;
  for (const auto& [bits, owners] : by_ip) {
    if (owners.size() < 2) continue;
    const std::string ip = Ipv4(bits).ToString();
    auto culprits_of = [](const std::vector<const InterfaceAddress*>& group) {
      std::vector<Culprit> culprits;
      for (const InterfaceAddress* a : group) {
        culprits.push_back({a->owner, a->ip_item, a->ip_text});
      }
      return culprits;
    };

    std::map<std::string, std::vector<const InterfaceAddress*>> by_config;
    for (const InterfaceAddress* a : owners) by_config[a->config].push_back(a);
    for (const auto& [config, group] : by_config) {
      if (group.size() < 2) continue;
      out.push_back({"MULTI.1", Severity::kError,
                     "IP address " + ip + " is configured more than once on " +
                         graph.HostNameOf(graph.At(config)),
                     culprits_of(group)});
    }
    if (by_config.size() < 2) continue;

    // Owners outside any segment form their own singleton segment.
    std::map<std::string, std::vector<const InterfaceAddress*>> by_segment;
    for (const InterfaceAddress* a : owners) {
      std::string key = a->segment ? "s" + std::to_string(*a->segment)
                                   : "n" + a->owner;
      by_segment[key].push_back(a);
    }
    for (const auto& [key, group] : by_segment) {
      std::set<std::string> configs;
      for (const InterfaceAddress* a : group) configs.insert(a->config);
      if (group.size() < 2 || configs.size() < 2) continue;
      out.push_back({"MULTI.2-same", Severity::kError,
                     "IP address " + ip +
                         " is duplicated within the same segment",
                     culprits_of(group)});
    }
    if (by_segment.size() > 1) {
      out.push_back({"MULTI.2-diff", Severity::kError,
                     "IP address " + ip +
                         " is duplicated across different segments",
                     culprits_of(owners)});
    }
  }
  return out;
}

std::vector<Violation> CheckAllowedVlan(const ModelGraph& graph) {
  std::vector<Violation> out;
  std::set<std::string> warned;
  for (const LinkEnds& link : Links(graph)) {
    if (ModeOf(*link.a) != PortMode::kTrunk ||
        ModeOf(*link.b) != PortMode::kTrunk) {
      continue;
    }
    for (const NodeRecord* end : {link.a, link.b}) {
      const std::string* text = end->Field("allowedVlan");
      const NodeRecord* config = graph.FindConfigOf(end->name);
      if (text == nullptr || config == nullptr || warned.contains(end->name)) {
        continue;
      }
      std::set<int> defined = DefinedVlans(graph, *config);
      std::set<int> missing;
      for (int v : ParseVlanList(*text)) {
        if (!defined.contains(v)) missing.insert(v);
      }
      if (missing.empty()) continue;
      warned.insert(end->name);
      out.push_back({"MULTI.4-undefined", Severity::kWarning,
                     "allowedVlan of " + Describe(graph, *end) +
                         " names VLANs " + JoinSet(missing) +
                         " that are not defined on the device",
                     {CulpritOf(*end, "allowedVlan")}});
    }
    std::set<int> ea = EffectiveAllowed(graph, *link.a);
    std::set<int> eb = EffectiveAllowed(graph, *link.b);
    if (ea == eb) continue;
    out.push_back({"MULTI.4", Severity::kError,
                   "allowedVlan mismatch: " + JoinSet(ea) + " on " +
                       Describe(graph, *link.a) + ", " + JoinSet(eb) + " on " +
                       Describe(graph, *link.b),
                   {CulpritOf(*link.a, "allowedVlan"),
                    CulpritOf(*link.b, "allowedVlan")}});
  }
  return out;
}

std::vector<Violation> CheckPairwiseLink(const ModelGraph& graph) {
  std::vector<Violation> out;
  for (const LinkEnds& link : Links(graph)) {
    const NodeRecord& a = *link.a;
    const NodeRecord& b = *link.b;
    const std::string da = Describe(graph, a);
    const std::string db = Describe(graph, b);
    const PortMode ma = ModeOf(a);
    const PortMode mb = ModeOf(b);

    if (ma == PortMode::kAccess && mb == PortMode::kAccess) {
      const std::string va = FieldOr(a, "accessVlan");
      const std::string vb = FieldOr(b, "accessVlan");
      if (va != vb) {
        out.push_back({"MULTI.5", Severity::kError,
                       "accessVlan mismatch: VLAN " + va + " on " + da +
                           ", VLAN " + vb + " on " + db,
                       {CulpritOf(a, "accessVlan"), CulpritOf(b, "accessVlan")}});
      }
    } else if ((ma == PortMode::kAccess && mb == PortMode::kTrunk) ||
               (ma == PortMode::kTrunk && mb == PortMode::kAccess)) {
      out.push_back({"MULTI.5", Severity::kError,
                     "switchport mode mismatch: " + da + " is " +
                         (ma == PortMode::kAccess ? "access" : "trunk") +
                         ", " + db + " is " +
                         (mb == PortMode::kAccess ? "access" : "trunk"),
                     {CulpritOf(a, "mode"), CulpritOf(b, "mode")}});
    }

    if (ma == PortMode::kTrunk && mb == PortMode::kTrunk) {
      const std::string na = FieldOr(a, "nativeVlan", "1");
      const std::string nb = FieldOr(b, "nativeVlan", "1");
      if (ParseInt(&na) != ParseInt(&nb)) {
        out.push_back({"MULTI.6", Severity::kError,
                       "nativeVlan mismatch: VLAN " + na + " on " + da +
                           ", VLAN " + nb + " on " + db,
                       {CulpritOf(a, "nativeVlan"), CulpritOf(b, "nativeVlan")}});
      }
    }

    if (ExplicitDiffers(a, b, "duplex")) {
      out.push_back({"MULTI.7", Severity::kError,
                     "duplex mismatch: " + FieldOr(a, "duplex") + " on " + da +
                         ", " + FieldOr(b, "duplex") + " on " + db,
                     {CulpritOf(a, "duplex"), CulpritOf(b, "duplex")}});
    }
    if (ExplicitDiffers(a, b, "speed")) {
      out.push_back({"MULTI.8", Severity::kError,
                     "speed mismatch: " + FieldOr(a, "speed") + " on " + da +
                         ", " + FieldOr(b, "speed") + " on " + db,
                     {CulpritOf(a, "speed"), CulpritOf(b, "speed")}});
    }
  }
  return out;
}

namespace {

std::vector<Violation> CheckVlanDuplication(const ModelGraph& graph) {
  std::vector<Violation> out;
  for (const NodeRecord* config : graph.NodesOfKind(NodeKind::kConfig)) {
    std::map<int, std::vector<const NodeRecord*>> by_num;
    for (const NodeRecord* vlan :
         graph.Neighbors(config->name, NodeKind::kVlan)) {
      if (auto n = ParseInt(vlan->Field("num"))) by_num[*n].push_back(vlan);
    }
    for (const auto& [num, vlans] : by_num) {
      if (vlans.size() < 2) continue;
      std::vector<Culprit> culprits;
      for (const NodeRecord* v : vlans) culprits.push_back(CulpritOf(*v, "num"));
      out.push_back({"MULTI.3", Severity::kError,
                     "VLAN " + std::to_string(num) + " is defined " +
                         std::to_string(vlans.size()) + " times on " +
                         graph.HostNameOf(*config),
                     std::move(culprits)});
    }
  }
  return out;
}

// Per VLAN, links whose two ends both carry it form a multigraph over
// Configs; every link that closes a cycle in the spanning forest yields one
// loop, reported with the ports along it.
std::vector<Violation> CheckLoops(const ModelGraph& graph) {
  struct Edge {
    std::string u, v;
    const LinkEnds* link;
  };
  std::vector<LinkEnds> links = Links(graph);
  std::map<int, std::vector<Edge>> by_vlan;
  for (const LinkEnds& link : links) {
    if (ModeOf(*link.a) == PortMode::kRouted ||
        ModeOf(*link.b) == PortMode::kRouted) {
      continue;
    }
    const NodeRecord* ca = graph.FindConfigOf(link.a->name);
    const NodeRecord* cb = graph.FindConfigOf(link.b->name);
    if (ca == nullptr || cb == nullptr) continue;
    std::set<int> va = CarriedVlans(graph, *link.a);
    for (int v : CarriedVlans(graph, *link.b)) {
      if (va.contains(v)) by_vlan[v].push_back({ca->name, cb->name, &link});
    }
  }

  std::vector<Violation> out;
  for (const auto& [vlan, edges] : by_vlan) {
    // Forest adjacency: config -> (neighbor, edge index).
    std::map<std::string, std::vector<std::pair<std::string, std::size_t>>>
        forest;
    std::map<std::string, std::string> parent;
    auto find = [&](std::string x) {
      parent.try_emplace(x, x);
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const Edge& e = edges[i];
      std::string ru = find(e.u);
      std::string rv = find(e.v);
      if (ru != rv) {
        parent[ru] = rv;
        forest[e.u].push_back({e.v, i});
        forest[e.v].push_back({e.u, i});
        continue;
      }
      // Path e.v -> e.u in the forest, by BFS.
      std::map<std::string, std::pair<std::string, std::size_t>> came_from;
      std::queue<std::string> frontier;
      frontier.push(e.v);
      came_from[e.v] = {e.v, i};
      while (!frontier.empty() && !came_from.contains(e.u)) {
        std::string cur = frontier.front();
        frontier.pop();
        for (const auto& [next, idx] : forest[cur]) {
          if (came_from.try_emplace(next, cur, idx).second) frontier.push(next);
        }
      }
      std::vector<std::size_t> cycle = {i};
      for (std::string cur = e.u; cur != e.v; cur = came_from[cur].first) {
        cycle.push_back(came_from[cur].second);
      }
      std::vector<Culprit> culprits;
      std::vector<std::string> ports;
      for (std::size_t idx : cycle) {
        for (const NodeRecord* end : {edges[idx].link->a, edges[idx].link->b}) {
          culprits.push_back(CulpritOf(
              *end, ModeOf(*end) == PortMode::kTrunk ? "allowedVlan"
                                                     : "accessVlan"));
          ports.push_back(Describe(graph, *end));
        }
      }
      out.push_back({"MULTI.9", Severity::kWarning,
                     "Loop in VLAN " + std::to_string(vlan) + " through " +
                         JoinNames(ports) +
                         "; a broadcast storm may occur if not addressed",
                     std::move(culprits)});
    }
  }
  return out;
}

std::vector<Culprit> AddressCulprits(const InterfaceAddress& a) {
  return {{a.owner, a.ip_item, a.ip_text}, {a.owner, a.mask_item, a.mask_text}};
}

std::vector<Violation> CheckSubnets(const ModelGraph& graph) {
  SegmentIndex segments(graph);
  std::vector<InterfaceAddress> addresses = CollectAddresses(graph, segments);
  std::map<std::size_t, std::vector<const InterfaceAddress*>> by_segment;
  for (const InterfaceAddress& a : addresses) {
    if (a.segment && a.Network()) by_segment[*a.segment].push_back(&a);
  }
  auto seg_label = [&](std::size_t s) {
    const auto& vlan = segments.segments()[s].vlan;
    return vlan ? "VLAN " + std::to_string(*vlan) : std::string("routed link");
  };

  std::vector<Violation> out;
  for (const auto& [seg, members] : by_segment) {
    std::set<Prefix> networks;
    for (const InterfaceAddress* a : members) networks.insert(*a->Network());
    if (networks.size() < 2) continue;
    std::vector<Culprit> culprits;
    std::vector<std::string> names;
    for (const InterfaceAddress* a : members) {
      auto c = AddressCulprits(*a);
      culprits.insert(culprits.end(), c.begin(), c.end());
    }
    for (const Prefix& p : networks) names.push_back(p.ToString());
    out.push_back({"MULTI.11", Severity::kError,
                   "Different networks " + JoinNames(names) +
                       " are assigned within " + seg_label(seg),
                   std::move(culprits)});
  }

  for (auto i = by_segment.begin(); i != by_segment.end(); ++i) {
    for (auto j = std::next(i); j != by_segment.end(); ++j) {
      std::set<const InterfaceAddress*> left, right;
      std::set<std::string> nets;
      for (const InterfaceAddress* a : i->second) {
        for (const InterfaceAddress* b : j->second) {
          if (!Overlaps(*a->Network(), *b->Network())) continue;
          left.insert(a);
          right.insert(b);
          nets.insert(a->Network()->ToString() + " (" + seg_label(i->first) +
                      ")");
          nets.insert(b->Network()->ToString() + " (" + seg_label(j->first) +
                      ")");
        }
      }
      if (left.empty()) continue;
      std::vector<Culprit> culprits;
      for (const auto* side : {&left, &right}) {
        for (const InterfaceAddress* a : *side) {
          auto c = AddressCulprits(*a);
          culprits.insert(culprits.end(), c.begin(), c.end());
        }
      }
      out.push_back({"MULTI.10", Severity::kError,
                     "Subnets overlap across different segments: " +
                         JoinNames({nets.begin(), nets.end()}),
                     std::move(culprits)});
    }
  }
  return out;
}

std::vector<Violation> CheckUnusedInterfaces(const ModelGraph& graph) {
  std::vector<Violation> out;
  for (const NodeRecord* es : graph.NodesOfKind(NodeKind::kEthernetSetting)) {
    if (LinkOf(graph, *es) != nullptr || IsShutdown(*es)) continue;
    out.push_back({"MULTI.12", Severity::kWarning,
                   "Unused interface " + Describe(graph, *es) +
                       " is not shut down",
                   {CulpritOf(*es, "shutdown")}});
  }
  return out;
}

}  // namespace

std::vector<Violation> CheckL3Structure(const ModelGraph& graph) {
  std::vector<Violation> out = CheckVlanDuplication(graph);
  for (auto part : {CheckLoops(graph), CheckSubnets(graph),
                    CheckUnusedInterfaces(graph)}) {
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<Violation> CheckMultiNode(const ModelGraph& graph,
                                      const RuleFilter& filter) {
  std::vector<Violation> out;
  for (auto part : {CheckDuplicateIp(graph), CheckAllowedVlan(graph),
                    CheckPairwiseLink(graph), CheckL3Structure(graph)}) {
    out.insert(out.end(), part.begin(), part.end());
  }
  out = Filtered(std::move(out), filter);
  SortViolations(out);
  return out;
}

}  // namespace ncverify
