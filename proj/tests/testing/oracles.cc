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

#include "testing/oracles.h"

#include <bit>
#include <charconv>
#include <cstdint>
#include <deque>
#include <optional>
#include <string_view>

namespace ncverify::testing {
namespace {

std::optional<int> ToInt(const std::string* text) {
  if (text == nullptr) return std::nullopt;
  int value = 0;
  auto [end, ec] =
      std::from_chars(text->data(), text->data() + text->size(), value);
  if (ec != std::errc() || end != text->data() + text->size()) {
    return std::nullopt;
  }
  return value;
}

bool Shut(const NodeRecord& node) {
  const std::string* v = node.Field("shutdown");
  return v != nullptr && *v == "true";
}

enum class Mode { kRouted, kAccess, kTrunk };

Mode PortModeOf(const NodeRecord& es) {
  const std::string* mode = es.Field("mode");
  if (mode != nullptr && *mode == "trunk") return Mode::kTrunk;
  if (mode != nullptr && *mode == "access") return Mode::kAccess;
  return es.Has("accessVlan") ? Mode::kAccess : Mode::kRouted;
}

std::set<int> VlanList(const std::string& text) {
  std::set<int> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    std::string token = text.substr(start, comma - start);
    std::size_t dash = token.find('-');
    if (dash == std::string::npos) {
      if (auto v = ToInt(&token)) out.insert(*v);
    } else {
      std::string lo_text = token.substr(0, dash);
      std::string hi_text = token.substr(dash + 1);
      auto lo = ToInt(&lo_text);
      auto hi = ToInt(&hi_text);
      if (lo && hi) {
        for (int v = *lo; v <= *hi; ++v) out.insert(v);
      }
    }
    start = comma + 1;
  }
  return out;
}

std::set<int> Defined(const ModelGraph& graph, const std::string& config) {
  std::set<int> out;
  for (const NodeRecord* vlan : graph.Neighbors(config, NodeKind::kVlan)) {
    if (auto n = ToInt(vlan->Field("num"))) out.insert(*n);
  }
  return out;
}

std::set<int> Carried(const ModelGraph& graph, const NodeRecord& es,
                      const std::string& config) {
  if (Shut(es)) return {};
  switch (PortModeOf(es)) {
    case Mode::kAccess:
      if (auto v = ToInt(es.Field("accessVlan"))) return {*v};
      return {};
    case Mode::kTrunk:
      if (const std::string* allowed = es.Field("allowedVlan")) {
        return VlanList(*allowed);
      }
      return Defined(graph, config);
    case Mode::kRouted:
      return {};
  }
  return {};
}

std::string Bridge(const std::string& config, int vlan) {
  return "B|" + config + "|" + std::to_string(vlan);
}
std::string Routed(const std::string& es) { return "R|" + es; }

// Undirected graph of bridge (config, vlan) and routed-port vertices.
class FloodGraph {
 public:
  void Connect(const std::string& a, const std::string& b) {
    adjacent_[a].insert(b);
    adjacent_[b].insert(a);
  }

  // Component label: the smallest vertex reachable from `start`.
  std::string Component(const std::string& start) {
    auto cached = label_.find(start);
    if (cached != label_.end()) return cached->second;
    std::set<std::string> seen = {start};
    std::deque<std::string> queue = {start};
    while (!queue.empty()) {
      std::string v = queue.front();
      queue.pop_front();
      for (const std::string& next : adjacent_[v]) {
        if (seen.insert(next).second) queue.push_back(next);
      }
    }
    for (const std::string& v : seen) label_[v] = *seen.begin();
    return *seen.begin();
  }

 private:
  std::map<std::string, std::set<std::string>> adjacent_;
  std::map<std::string, std::string> label_;
};

struct Owner {
  std::string node;
  std::string config;
  std::uint32_t ip;
  std::optional<std::string> vertex;
};

FloodGraph BuildFlood(const ModelGraph& graph) {
  FloodGraph flood;
  for (const NodeRecord* link : graph.NodesOfKind(NodeKind::kLink)) {
    auto ends = graph.Neighbors(link->name, NodeKind::kEthernetSetting);
    const NodeRecord& a = *ends.at(0);
    const NodeRecord& b = *ends.at(1);
    const NodeRecord* ca = graph.FindConfigOf(a.name);
    const NodeRecord* cb = graph.FindConfigOf(b.name);
    if (ca == nullptr || cb == nullptr) continue;
    const Mode ma = PortModeOf(a);
    const Mode mb = PortModeOf(b);
    if (ma == Mode::kRouted && mb == Mode::kRouted) {
      if (!Shut(a) && !Shut(b)) flood.Connect(Routed(a.name), Routed(b.name));
    } else if (ma == Mode::kRouted || mb == Mode::kRouted) {
      const NodeRecord& routed = ma == Mode::kRouted ? a : b;
      const NodeRecord& other = ma == Mode::kRouted ? b : a;
      const NodeRecord& other_config = ma == Mode::kRouted ? *cb : *ca;
      if (Shut(routed) || Shut(other) || PortModeOf(other) != Mode::kAccess) {
        continue;
      }
      std::set<int> vlans = Carried(graph, other, other_config.name);
      if (vlans.size() == 1) {
        flood.Connect(Routed(routed.name),
                      Bridge(other_config.name, *vlans.begin()));
      }
    } else {
      std::set<int> va = Carried(graph, a, ca->name);
      for (int v : Carried(graph, b, cb->name)) {
        if (va.contains(v)) flood.Connect(Bridge(ca->name, v), Bridge(cb->name, v));
      }
    }
  }

  return flood;
}

// The flood-graph vertex an addressed node sits on, if any.
std::optional<std::string> VertexOf(const ModelGraph& graph,
                                    const NodeRecord& node) {
  const NodeRecord* config = graph.FindConfigOf(node.name);
  if (config == nullptr) return std::nullopt;
  switch (node.kind) {
    case NodeKind::kVlanSetting:
      if (auto v = ToInt(node.Field("vlanNum"))) {
        return Bridge(config->name, *v);
      }
      return std::nullopt;
    case NodeKind::kEthernetSetting:
      if (PortModeOf(node) == Mode::kRouted && !Shut(node)) {
        return Routed(node.name);
      }
      return std::nullopt;
    case NodeKind::kClient: {
      auto ports = graph.Neighbors(node.name, NodeKind::kEthernetSetting);
      if (ports.empty() || Shut(*ports.front())) return std::nullopt;
      const NodeRecord& port = *ports.front();
      switch (PortModeOf(port)) {
        case Mode::kRouted:
          return Routed(port.name);
        case Mode::kAccess:
          if (auto v = ToInt(port.Field("accessVlan"))) {
            return Bridge(config->name, *v);
          }
          return std::nullopt;
        case Mode::kTrunk:
          return Bridge(config->name,
                        ToInt(port.Field("nativeVlan")).value_or(1));
      }
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

}  // namespace

std::map<std::string, std::string> OracleSegments(const ModelGraph& graph) {
  FloodGraph flood = BuildFlood(graph);
  std::map<std::string, std::string> out;
  for (const NodeRecord& node : graph.nodes()) {
    if (auto vertex = VertexOf(graph, node)) {
      out[node.name] = flood.Component(*vertex);
    }
  }
  return out;
}

std::set<DuplicateFinding> OracleDuplicateIp(const ModelGraph& graph) {
  FloodGraph flood = BuildFlood(graph);
  std::vector<Owner> owners;
  auto add_owner = [&](const NodeRecord& node, std::string_view ip_item,
                       std::optional<std::string> vertex) {
    const std::string* text = node.Field(ip_item);
    const NodeRecord* config = graph.FindConfigOf(node.name);
    if (text == nullptr || config == nullptr) return;
    auto ip = Ipv4::Parse(*text);
    if (!ip) return;
    owners.push_back({node.name, config->name, ip->bits(), std::move(vertex)});
  };
  for (const NodeRecord& node : graph.nodes()) {
    if (node.kind == NodeKind::kVlanSetting ||
        node.kind == NodeKind::kEthernetSetting) {
      add_owner(node, "ipAddress", VertexOf(graph, node));
    } else if (node.kind == NodeKind::kClient) {
      add_owner(node, "IpAddress", VertexOf(graph, node));
    }
  }
  std::set<std::pair<std::string, std::uint32_t>> assigned;
  for (const Owner& o : owners) assigned.emplace(o.config, o.ip);
  for (const NodeRecord* ois :
       graph.NodesOfKind(NodeKind::kOspfInterfaceSetting)) {
    const std::string* wildcard = ois->Field("wildcardMask");
    const NodeRecord* config = graph.FindConfigOf(ois->name);
    if (wildcard == nullptr || *wildcard != "0.0.0.0" || config == nullptr) {
      continue;
    }
    const std::string* text = ois->Field("ipAddress");
    auto ip = text ? Ipv4::Parse(*text) : std::nullopt;
    if (!ip || assigned.contains({config->name, ip->bits()})) continue;
    owners.push_back({ois->name, config->name, ip->bits(), std::nullopt});
  }

  // Component of each owner; owners outside the flood graph stand alone.
  std::vector<std::string> component;
  for (const Owner& o : owners) {
    component.push_back(o.vertex ? flood.Component(*o.vertex) : "-" + o.node);
  }

  std::set<DuplicateFinding> out;
  std::map<std::uint32_t, std::vector<std::size_t>> by_ip;
  for (std::size_t i = 0; i < owners.size(); ++i) {
    by_ip[owners[i].ip].push_back(i);
  }
  for (const auto& [bits, group] : by_ip) {
    const std::string ip = Ipv4(bits).ToString();
    std::map<std::string, std::set<std::string>> same_device;
    std::map<std::string, std::set<std::string>> same_segment;
    bool different_segments = false;
    for (std::size_t x = 0; x < group.size(); ++x) {
      for (std::size_t y = x + 1; y < group.size(); ++y) {
        const Owner& p = owners[group[x]];
        const Owner& q = owners[group[y]];
        const bool one_device = p.config == q.config;
        const bool one_segment = component[group[x]] == component[group[y]];
        if (one_device) {
          same_device[p.config].insert({p.node, q.node});
        } else if (one_segment) {
          same_segment[component[group[x]]].insert({p.node, q.node});
        } else {
          different_segments = true;
        }
      }
    }
    for (const auto& [config, nodes] : same_device) {
      out.insert({"MULTI.1", ip, nodes});
    }
    for (const auto& [segment, nodes] : same_segment) {
      // Co-located owners on one device belong to the segment finding too.
      std::set<std::string> all = nodes;
      for (std::size_t i : group) {
        if (component[i] == segment) all.insert(owners[i].node);
      }
      out.insert({"MULTI.2-same", ip, all});
    }
    if (different_segments) {
      std::set<std::string> all;
      for (std::size_t i : group) all.insert(owners[i].node);
      out.insert({"MULTI.2-diff", ip, all});
    }
  }
  return out;
}

std::set<DuplicateFinding> DuplicateFindingsOf(
    const std::vector<Violation>& violations) {
  std::set<DuplicateFinding> out;
  for (const Violation& v : violations) {
    if (RuleItem(v.rule_id) != "MULTI.1" && RuleItem(v.rule_id) != "MULTI.2") {
      continue;
    }
    DuplicateFinding f{v.rule_id, "", {}};
    for (const Culprit& c : v.culprits) {
      f.owners.insert(c.node);
      if (auto ip = Ipv4::Parse(c.value)) f.ip = ip->ToString();
    }
    out.insert(std::move(f));
  }
  return out;
}

bool WildcardMatchesByEnumeration(Ipv4 statement, Ipv4 wildcard,
                                  Ipv4 address) {
  std::vector<std::uint32_t> free_bits;
  for (int bit = 0; bit < 32; ++bit) {
    if (wildcard.bits() & (1u << bit)) free_bits.push_back(1u << bit);
  }
  const std::uint32_t fixed = statement.bits() & ~wildcard.bits();
  const std::uint64_t assignments = std::uint64_t{1} << free_bits.size();
  for (std::uint64_t pick = 0; pick < assignments; ++pick) {
    std::uint32_t candidate = fixed;
    for (std::size_t i = 0; i < free_bits.size(); ++i) {
      if (pick & (std::uint64_t{1} << i)) candidate |= free_bits[i];
    }
    if (candidate == address.bits()) return true;
  }
  return false;
}

BackboneOracle OracleBackbone(const ModelGraph& graph) {
  BackboneOracle out;
  std::map<int, std::set<std::string>> routers_in_area;
  for (const NodeRecord* router : graph.NodesOfKind(NodeKind::kOspfSetting)) {
    const NodeRecord* config = graph.FindConfigOf(router->name);
    if (config == nullptr) continue;
    struct Candidate {
      const NodeRecord* ois;
      Ipv4 network;
      Ipv4 wildcard;
    };
    std::vector<Candidate> statements;
    for (const NodeRecord* ois :
         graph.Neighbors(router->name, NodeKind::kOspfInterfaceSetting)) {
      const std::string* net = ois->Field("ipAddress");
      const std::string* wc = ois->Field("wildcardMask");
      auto network = net ? Ipv4::Parse(*net) : std::nullopt;
      auto wildcard = wc ? Ipv4::Parse(*wc) : std::nullopt;
      if (network && wildcard) statements.push_back({ois, *network, *wildcard});
    }
    for (const NodeRecord& node : graph.nodes()) {
      const bool l3 = node.kind == NodeKind::kVlanSetting ||
                      (node.kind == NodeKind::kEthernetSetting &&
                       PortModeOf(node) == Mode::kRouted);
      const std::string* text = node.Field("ipAddress");
      if (!l3 || text == nullptr) continue;
      const NodeRecord* owner = graph.FindConfigOf(node.name);
      if (owner == nullptr || owner->name != config->name) continue;
      auto ip = Ipv4::Parse(*text);
      if (!ip) continue;
      const Candidate* best = nullptr;
      for (const Candidate& s : statements) {
        if (!WildcardMatchesByEnumeration(s.network, s.wildcard, *ip)) continue;
        const int bits = std::popcount(s.wildcard.bits());
        if (best == nullptr) {
          best = &s;
          continue;
        }
        const int best_bits = std::popcount(best->wildcard.bits());
        if (bits < best_bits ||
            (bits == best_bits && s.ois->name < best->ois->name)) {
          best = &s;
        }
      }
      if (best == nullptr) continue;
      const int area = ToInt(best->ois->Field("areaId")).value_or(-1);
      out.interface_area[node.name] = area;
      routers_in_area[area].insert(router->name);
    }
  }
  out.has_area0 = routers_in_area.contains(0);

  std::map<std::string, std::vector<std::string>> with_id;
  for (const NodeRecord* router : graph.NodesOfKind(NodeKind::kOspfSetting)) {
    if (const std::string* id = router->Field("routerId")) {
      with_id[*id].push_back(router->name);
    }
  }
  std::map<std::string, std::set<std::string>> adjacent;
  for (const NodeRecord* vl : graph.NodesOfKind(NodeKind::kOspfVirtualLink)) {
    auto owners = graph.Neighbors(vl->name, NodeKind::kOspfSetting);
    auto transit = ToInt(vl->Field("areaId"));
    const std::string* peer_id = vl->Field("routerId");
    if (owners.empty() || !transit || peer_id == nullptr) continue;
    const std::set<std::string>& members = routers_in_area[*transit];
    const std::string& self = owners.front()->name;
    if (!members.contains(self)) continue;
    for (const std::string& peer : with_id[*peer_id]) {
      if (peer != self && members.contains(peer)) {
        adjacent[self].insert(peer);
        adjacent[peer].insert(self);
      }
    }
  }

  std::deque<std::string> queue;
  for (const std::string& r : routers_in_area[0]) {
    out.backbone_routers.insert(r);
    queue.push_back(r);
  }
  while (!queue.empty()) {
    std::string r = queue.front();
    queue.pop_front();
    for (const std::string& next : adjacent[r]) {
      if (out.backbone_routers.insert(next).second) queue.push_back(next);
    }
  }
  for (const auto& [area, routers] : routers_in_area) {
    if (area == 0 || routers.empty()) continue;
    bool reached = false;
    for (const std::string& r : routers) {
      reached = reached || out.backbone_routers.contains(r);
    }
    if (!reached) out.disconnected.insert(area);
  }
  return out;
}

std::set<int> DisconnectedAreasOf(const std::vector<Violation>& violations) {
  std::set<int> out;
  for (const Violation& v : violations) {
    if (v.rule_id != "OSPF.8") continue;
    std::string_view text = v.message;
    text.remove_prefix(std::string_view("Area ").size());
    int area = 0;
    std::from_chars(text.data(), text.data() + text.size(), area);
    out.insert(area);
  }
  return out;
}

}  // namespace ncverify::testing
