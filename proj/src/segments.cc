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

#include "ncverify/segments.h"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace ncverify {
namespace {

class DisjointSets {
 public:
  std::size_t Add() {
    parent_.push_back(parent_.size());
    return parent_.size() - 1;
  }
  std::size_t Find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void Union(std::size_t a, std::size_t b) { parent_[Find(a)] = Find(b); }

 private:
  std::vector<std::size_t> parent_;
};

std::optional<int> ToInt(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

}  // namespace

std::optional<int> ParseInt(const std::string* text) {
  if (text == nullptr) return std::nullopt;
  return ToInt(*text);
}

std::set<int> ParseVlanList(std::string_view text) {
  std::set<int> out;
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string_view token = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view()
                                           : text.substr(comma + 1);
    auto dash = token.find('-');
    if (dash == std::string_view::npos) {
      if (auto v = ToInt(token)) out.insert(*v);
      continue;
    }
    auto lo = ToInt(token.substr(0, dash));
    auto hi = ToInt(token.substr(dash + 1));
    if (lo && hi && *lo <= *hi && *hi - *lo <= 4094) {
      for (int v = *lo; v <= *hi; ++v) out.insert(v);
    }
  }
  return out;
}

PortMode ModeOf(const NodeRecord& ethernet) {
  if (const std::string* mode = ethernet.Field("mode")) {
    if (*mode == "trunk") return PortMode::kTrunk;
    if (*mode == "access") return PortMode::kAccess;
  }
  return ethernet.Has("accessVlan") ? PortMode::kAccess : PortMode::kRouted;
}

bool IsShutdown(const NodeRecord& node) {
  const std::string* v = node.Field("shutdown");
  return v != nullptr && *v == "true";
}

std::set<int> DefinedVlans(const ModelGraph& graph, const NodeRecord& config) {
  std::set<int> out;
  for (const NodeRecord* vlan : graph.Neighbors(config.name, NodeKind::kVlan)) {
    if (auto n = ParseInt(vlan->Field("num"))) out.insert(*n);
  }
  return out;
}

std::set<int> CarriedVlans(const ModelGraph& graph,
                           const NodeRecord& ethernet) {
  if (IsShutdown(ethernet)) return {};
  switch (ModeOf(ethernet)) {
    case PortMode::kAccess:
      if (auto v = ParseInt(ethernet.Field("accessVlan"))) return {*v};
      return {};
    case PortMode::kTrunk:
      if (const std::string* allowed = ethernet.Field("allowedVlan")) {
        return ParseVlanList(*allowed);
      }
      if (const NodeRecord* config = graph.FindConfigOf(ethernet.name)) {
        return DefinedVlans(graph, *config);
      }
      return {};
    case PortMode::kRouted:
      return {};
  }
  return {};
}

std::vector<LinkEnds> Links(const ModelGraph& graph) {
  std::vector<LinkEnds> out;
  for (const NodeRecord* link : graph.NodesOfKind(NodeKind::kLink)) {
    auto ends = graph.Neighbors(link->name, NodeKind::kEthernetSetting);
    out.push_back({link, ends.at(0), ends.at(1)});
  }
  return out;
}

const NodeRecord* LinkOf(const ModelGraph& graph, const NodeRecord& ethernet) {
  auto links = graph.Neighbors(ethernet.name, NodeKind::kLink);
  return links.empty() ? nullptr : links.front();
}

std::set<std::string> L2Segment::Configs() const {
  std::set<std::string> out;
  for (const SegmentMember& m : members) out.insert(m.config);
  return out;
}

SegmentIndex::SegmentIndex(const ModelGraph& graph) {
  DisjointSets sets;
  std::map<std::pair<std::string, int>, std::size_t> vlan_key;
  std::map<std::string, std::size_t> routed_key;
  // (set id, member, vlan or nullopt)
  struct Pending {
    std::size_t set;
    SegmentMember member;
    std::optional<int> vlan;
  };
  std::vector<Pending> pending;

  auto vlan_set = [&](const std::string& config, int vlan) {
    auto [it, inserted] = vlan_key.try_emplace({config, vlan}, 0);
    if (inserted) it->second = sets.Add();
    return it->second;
  };
  auto routed_set = [&](const std::string& ethernet) {
    auto [it, inserted] = routed_key.try_emplace(ethernet, 0);
    if (inserted) it->second = sets.Add();
    return it->second;
  };

  for (const NodeRecord* es : graph.NodesOfKind(NodeKind::kEthernetSetting)) {
    const NodeRecord* config = graph.FindConfigOf(es->name);
    if (config == nullptr) continue;
    std::vector<std::pair<std::size_t, std::optional<int>>> homes;
    if (ModeOf(*es) == PortMode::kRouted) {
      if (!IsShutdown(*es)) homes.emplace_back(routed_set(es->name), std::nullopt);
    } else {
      for (int v : CarriedVlans(graph, *es)) {
        homes.emplace_back(vlan_set(config->name, v), v);
      }
    }
    for (auto [set, vlan] : homes) {
      pending.push_back({set, {config->name, es->name}, vlan});
    }
    // A client sits on the untagged VLAN of its port.
    std::optional<std::pair<std::size_t, std::optional<int>>> untagged;
    if (ModeOf(*es) == PortMode::kRouted) {
      if (!homes.empty()) untagged = homes.front();
    } else if (ModeOf(*es) == PortMode::kAccess && !homes.empty()) {
      untagged = homes.front();
    } else if (ModeOf(*es) == PortMode::kTrunk && !IsShutdown(*es)) {
      int native = ParseInt(es->Field("nativeVlan")).value_or(1);
      untagged.emplace(vlan_set(config->name, native), native);
    }
    if (untagged) {
      for (const NodeRecord* client :
           graph.Neighbors(es->name, NodeKind::kClient)) {
        pending.push_back(
            {untagged->first, {config->name, client->name}, untagged->second});
      }
    }
  }
  for (const NodeRecord* vs : graph.NodesOfKind(NodeKind::kVlanSetting)) {
    const NodeRecord* config = graph.FindConfigOf(vs->name);
    auto vlan = ParseInt(vs->Field("vlanNum"));
    if (config == nullptr || !vlan) continue;
    pending.push_back(
        {vlan_set(config->name, *vlan), {config->name, vs->name}, *vlan});
  }

  for (const LinkEnds& link : Links(graph)) {
    const NodeRecord* ca = graph.FindConfigOf(link.a->name);
    const NodeRecord* cb = graph.FindConfigOf(link.b->name);
    if (ca == nullptr || cb == nullptr) continue;
    const PortMode ma = ModeOf(*link.a);
    const PortMode mb = ModeOf(*link.b);
    if (ma == PortMode::kRouted || mb == PortMode::kRouted) {
      if (IsShutdown(*link.a) || IsShutdown(*link.b)) continue;
      if (ma == PortMode::kRouted && mb == PortMode::kRouted) {
        sets.Union(routed_set(link.a->name), routed_set(link.b->name));
      } else {
        // Routed port cabled to an access port joins that VLAN.
        const NodeRecord* routed = ma == PortMode::kRouted ? link.a : link.b;
        const NodeRecord* other = ma == PortMode::kRouted ? link.b : link.a;
        const NodeRecord* other_config = ma == PortMode::kRouted ? cb : ca;
        auto carried = CarriedVlans(graph, *other);
        if (ModeOf(*other) == PortMode::kAccess && carried.size() == 1) {
          sets.Union(routed_set(routed->name),
                     vlan_set(other_config->name, *carried.begin()));
        }
      }
      continue;
    }
    auto va = CarriedVlans(graph, *link.a);
    for (int v : CarriedVlans(graph, *link.b)) {
      if (va.contains(v)) {
        sets.Union(vlan_set(ca->name, v), vlan_set(cb->name, v));
      }
    }
  }

  std::map<std::size_t, L2Segment> by_root;
  for (const Pending& p : pending) {
    L2Segment& seg = by_root[sets.Find(p.set)];
    seg.members.insert(p.member);
    if (p.vlan) seg.vlan = p.vlan;
  }
  std::vector<std::pair<std::size_t, L2Segment>> ordered(by_root.begin(),
                                                         by_root.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
    if (x.second.vlan != y.second.vlan) return x.second.vlan < y.second.vlan;
    return *x.second.members.begin() < *y.second.members.begin();
  });
  std::map<std::size_t, std::size_t> root_to_index;
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    root_to_index[ordered[i].first] = i;
    segments_.push_back(std::move(ordered[i].second));
  }
  for (const auto& [key, set] : vlan_key) {
    auto it = root_to_index.find(sets.Find(set));
    if (it != root_to_index.end()) by_vlan_[key] = it->second;
  }
  for (const Pending& p : pending) {
    // A trunk port belongs to several segments; only single-home nodes are
    // indexed by name.
    const NodeRecord* node = graph.Find(p.member.node);
    if (node->kind == NodeKind::kEthernetSetting &&
        ModeOf(*node) != PortMode::kRouted) {
      continue;
    }
    by_node_[p.member.node] = root_to_index.at(sets.Find(p.set));
  }
}

std::optional<std::size_t> SegmentIndex::SegmentOfVlan(std::string_view config,
                                                       int vlan) const {
  auto it = by_vlan_.find(std::pair<std::string, int>(config, vlan));
  if (it == by_vlan_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> SegmentIndex::SegmentOfNode(
    std::string_view node) const {
  auto it = by_node_.find(node);
  if (it == by_node_.end()) return std::nullopt;
  return it->second;
}

std::vector<L2Segment> DiscoverSegments(const ModelGraph& graph) {
  return SegmentIndex(graph).segments();
}

std::optional<Prefix> InterfaceAddress::Network() const {
  if (!prefix_length) return std::nullopt;
  return Prefix::Of(ip, *prefix_length);
}

std::string L3InterfaceName(const ModelGraph& graph, const NodeRecord& node) {
  if (node.kind == NodeKind::kVlanSetting) {
    const std::string* num = node.Field("vlanNum");
    return "Vlan" + (num ? *num : std::string());
  }
  return InterfaceName(graph, node);
}

const NodeRecord* SviFor(const ModelGraph& graph, const NodeRecord& config,
                         int vlan) {
  for (const NodeRecord* vs :
       graph.Neighbors(config.name, NodeKind::kVlanSetting)) {
    if (ParseInt(vs->Field("vlanNum")) == vlan) return vs;
  }
  return nullptr;
}

std::vector<InterfaceAddress> CollectAddresses(const ModelGraph& graph,
                                               const SegmentIndex& segments) {
  std::vector<InterfaceAddress> out;
  auto add = [&](const NodeRecord& node, std::string_view ip_item,
                 std::string_view mask_item, bool mask_is_length) {
    const std::string* ip_text = node.Field(ip_item);
    if (ip_text == nullptr) return;
    auto ip = Ipv4::Parse(*ip_text);
    const NodeRecord* config = graph.FindConfigOf(node.name);
    if (!ip || config == nullptr) return;
    InterfaceAddress a{node.name,     config->name, node.kind,
                       *ip,           *ip_text,     std::string(ip_item),
                       std::nullopt,  std::string(mask_item),
                       "",            segments.SegmentOfNode(node.name)};
    if (const std::string* mask = node.Field(mask_item)) {
      a.mask_text = *mask;
      if (mask_is_length) {
        a.prefix_length = ParseInt(mask);
      } else if (auto m = Ipv4::Parse(*mask)) {
        a.prefix_length = MaskPrefixLength(*m);
      }
    }
    out.push_back(std::move(a));
  };

  for (const NodeRecord& n : graph.nodes()) {
    switch (n.kind) {
      case NodeKind::kEthernetSetting:
      case NodeKind::kVlanSetting:
        add(n, "ipAddress", "subnetMask", false);
        break;
      case NodeKind::kClient:
        add(n, "IpAddress", "subnetMask", true);
        break;
      default:
        break;
    }
  }

  std::set<std::pair<std::string, std::uint32_t>> assigned;
  for (const InterfaceAddress& a : out) assigned.emplace(a.config, a.ip.bits());
  for (const NodeRecord* ois :
       graph.NodesOfKind(NodeKind::kOspfInterfaceSetting)) {
    const std::string* wildcard = ois->Field("wildcardMask");
    const std::string* ip_text = ois->Field("ipAddress");
    const NodeRecord* config = graph.FindConfigOf(ois->name);
    if (wildcard == nullptr || *wildcard != "0.0.0.0" || ip_text == nullptr ||
        config == nullptr) {
      continue;
    }
    auto ip = Ipv4::Parse(*ip_text);
    if (!ip || assigned.contains({config->name, ip->bits()})) continue;
    out.push_back({ois->name, config->name, ois->kind, *ip, *ip_text,
                   "ipAddress", 32, "wildcardMask", *wildcard, std::nullopt});
  }
  return out;
}

}  // namespace ncverify
