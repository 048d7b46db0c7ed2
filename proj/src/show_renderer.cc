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

#include "ncverify/show_renderer.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdio>
#include <sstream>
#include <tuple>

#include "ncverify/election.h"
#include "ncverify/embedded_data.h"
#include "ncverify/ospf_checks.h"
#include "ncverify/segments.h"
#include "ncverify/template.h"

namespace ncverify {
namespace {

constexpr std::array<std::string_view, 9> kForms = {
    "show vlan brief <config>",
    "show vlan brief all",
    "show vlan <vlan id>",
    "show running config <config>",
    "show spanning-tree <config>",
    "show ip protocols <config>",
    "show ip ospf neighbor <config>",
    "show ip ospf interface <config> <EthernetSetting>",
    "show ip ospf interface <config> <VlanSetting>",
};

std::string Template(std::string_view name) {
  return std::string(EmbeddedData("data/templates/" + std::string(name)));
}

std::string FieldOr(const NodeRecord& node, std::string_view item,
                    std::string fallback = "") {
  const std::string* v = node.Field(item);
  return v == nullptr ? fallback : *v;
}

bool IsTrue(const NodeRecord& node, std::string_view item) {
  const std::string* v = node.Field(item);
  return v != nullptr && *v == "true";
}

std::string Lower(std::string_view text) {
  std::string out(text);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

// Sets `key` only when the node carries `item`.
void Put(TemplateScope& scope, const std::string& key, const NodeRecord& node,
         std::string_view item) {
  if (const std::string* v = node.Field(item)) scope.values[key] = *v;
}

std::string VlanName(const NodeRecord& vlan) {
  if (const std::string* name = vlan.Field("name")) return *name;
  char buf[16];
  std::snprintf(buf, sizeof buf, "VLAN%04d",
                ParseInt(vlan.Field("num")).value_or(0));
  return buf;
}

// Vlan nodes of a Config ordered by number.
std::vector<const NodeRecord*> SortedVlans(const ModelGraph& graph,
                                           const NodeRecord& config) {
  auto vlans = graph.Neighbors(config.name, NodeKind::kVlan);
  std::stable_sort(vlans.begin(), vlans.end(), [](auto* a, auto* b) {
    return ParseInt(a->Field("num")).value_or(0) <
           ParseInt(b->Field("num")).value_or(0);
  });
  return vlans;
}

std::vector<const NodeRecord*> SortedPorts(const ModelGraph& graph,
                                           const NodeRecord& config) {
  auto ports = graph.Neighbors(config.name, NodeKind::kEthernetSetting);
  auto key = [](const NodeRecord* n) {
    return std::make_tuple(ParseInt(n->Field("stack")).value_or(0),
                           ParseInt(n->Field("slot")).value_or(0),
                           ParseInt(n->Field("port")).value_or(0));
  };
  std::stable_sort(ports.begin(), ports.end(),
                   [&](auto* a, auto* b) { return key(a) < key(b); });
  return ports;
}

std::vector<const NodeRecord*> SortedSvis(const ModelGraph& graph,
                                          const NodeRecord& config) {
  auto svis = graph.Neighbors(config.name, NodeKind::kVlanSetting);
  std::stable_sort(svis.begin(), svis.end(), [](auto* a, auto* b) {
    return ParseInt(a->Field("vlanNum")).value_or(0) <
           ParseInt(b->Field("vlanNum")).value_or(0);
  });
  return svis;
}

std::string JoinComma(const std::vector<std::string>& parts) {
  std::string out;
  for (const std::string& p : parts) {
    if (!out.empty()) out += ", ";
    out += p;
  }
  return out;
}

// Access ports of `config` in VLAN `num`, plus trunks when `with_trunks`.
std::string PortsInVlan(const ModelGraph& graph, const NodeRecord& config,
                        int num, bool with_trunks) {
  std::vector<std::string> ports;
  for (const NodeRecord* es : SortedPorts(graph, config)) {
    PortMode mode = ModeOf(*es);
    bool member = false;
    if (mode == PortMode::kAccess) {
      member = ParseInt(es->Field("accessVlan")) == num;
    } else if (mode == PortMode::kTrunk && with_trunks) {
      member = CarriedVlans(graph, *es).contains(num);
    }
    if (member) ports.push_back(ShortInterfaceName(graph, *es));
  }
  return JoinComma(ports);
}

std::string NetworkType(const NodeRecord& ois) {
  std::string mode = FieldOr(ois, "ospdNetworkMode", "broadcast");
  for (char& c : mode) {
    c = c == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  return mode;
}

bool ElectsDr(const NodeRecord& ois) {
  std::string mode = FieldOr(ois, "ospdNetworkMode", "broadcast");
  return mode == "broadcast" || mode == "non-broadcast";
}

// ---- show vlan ----------------------------------------------------------

TemplateScope VlanRow(const ModelGraph& graph, const NodeRecord& config,
                      const NodeRecord& vlan) {
  TemplateScope row;
  row.values["Device"] = graph.HostNameOf(config);
  row.values["Num"] = FieldOr(vlan, "num");
  row.values["Name"] = VlanName(vlan);
  row.values["Status"] = "active";
  auto num = ParseInt(vlan.Field("num"));
  row.values["Ports"] = num ? PortsInVlan(graph, config, *num, false) : "";
  return row;
}

std::string ShowVlanBrief(const ModelGraph& graph, const NodeRecord& config) {
  TemplateScope scope;
  for (const NodeRecord* vlan : SortedVlans(graph, config)) {
    scope.lists["vlans"].push_back(VlanRow(graph, config, *vlan));
  }
  return RenderTemplate(Template("show_vlan_brief.tmpl"), scope);
}

std::string ShowVlanBriefAll(const ModelGraph& graph) {
  TemplateScope scope;
  for (const NodeRecord* config : graph.NodesOfKind(NodeKind::kConfig)) {
    for (const NodeRecord* vlan : SortedVlans(graph, *config)) {
      scope.lists["vlans"].push_back(VlanRow(graph, *config, *vlan));
    }
  }
  return RenderTemplate(Template("show_vlan_brief_all.tmpl"), scope);
}

std::string ShowVlan(const ModelGraph& graph, const OspfBindings& bindings,
                     int num) {
  TemplateScope scope;
  scope.values["Num"] = std::to_string(num);
  for (const NodeRecord* config : graph.NodesOfKind(NodeKind::kConfig)) {
    for (const NodeRecord* vlan : SortedVlans(graph, *config)) {
      if (ParseInt(vlan->Field("num")) != num) continue;
      TemplateScope row = VlanRow(graph, *config, *vlan);
      row.values["Ports"] = PortsInVlan(graph, *config, num, true);
      scope.lists["members"].push_back(std::move(row));
    }
    for (const NodeRecord* svi : SortedSvis(graph, *config)) {
      if (ParseInt(svi->Field("vlanNum")) != num) continue;
      TemplateScope row;
      row.values["Device"] = graph.HostNameOf(*config);
      row.values["Interface"] = L3InterfaceName(graph, *svi);
      std::string address = "unassigned";
      if (const std::string* ip = svi->Field("ipAddress")) {
        address = *ip;
        auto mask = Ipv4::Parse(FieldOr(*svi, "subnetMask"));
        if (auto len = mask ? MaskPrefixLength(*mask) : std::nullopt) {
          address += "/" + std::to_string(*len);
        }
      }
      row.values["Address"] = address;
      const OspfInterfaceBinding* b = bindings.Of(svi->name);
      row.values["AreaId"] =
          b ? FieldOr(graph.At(b->ois), "areaId") : std::string("-");
      scope.lists["svis"].push_back(std::move(row));
    }
  }
  return RenderTemplate(Template("show_vlan.tmpl"), scope);
}

// ---- show running config ------------------------------------------------

void AccessGroupLine(const NodeRecord& node, std::vector<std::string>& lines) {
  const std::string* acl = node.Field("accessListNumber");
  if (acl == nullptr) acl = node.Field("accessListName");
  if (acl == nullptr) return;
  lines.push_back("ip access-group " + *acl + " " +
                  FieldOr(node, "accessListInOrOut", "in"));
}

void OspfInterfaceLines(const ModelGraph& graph, const OspfBindings& bindings,
                        const NodeRecord& node,
                        std::vector<std::string>& lines) {
  const OspfInterfaceBinding* b = bindings.Of(node.name);
  if (b == nullptr) return;
  const NodeRecord& ois = graph.At(b->ois);
  if (const std::string* v = ois.Field("ospdNetworkMode")) {
    lines.push_back("ip ospf network " + *v);
  }
  if (const std::string* v = ois.Field("helloInterval")) {
    lines.push_back("ip ospf hello-interval " + *v);
  }
  if (const std::string* v = ois.Field("deadInterval")) {
    lines.push_back("ip ospf dead-interval " + *v);
  }
  if (const std::string* v = ois.Field("priority")) {
    lines.push_back("ip ospf priority " + *v);
  }
}

TemplateScope InterfaceBlock(std::string name,
                             const std::vector<std::string>& lines) {
  TemplateScope block;
  block.values["Name"] = std::move(name);
  for (const std::string& line : lines) {
    TemplateScope l;
    l.values["Line"] = line;
    block.lists["lines"].push_back(std::move(l));
  }
  return block;
}

std::string AccessListLine(const NodeRecord& acl) {
  std::vector<std::string> parts;
  auto add = [&](std::string_view item) {
    if (const std::string* v = acl.Field(item)) parts.push_back(*v);
  };
  auto address = [&](std::string_view ip, std::string_view wildcard) {
    if (const std::string* v = acl.Field(ip)) {
      const std::string* wc = acl.Field(wildcard);
      if (wc != nullptr && *wc == "0.0.0.0") {
        parts.push_back("host " + *v);
      } else {
        parts.push_back(*v);
        add(wildcard);
      }
    } else {
      parts.push_back("any");
    }
  };
  add("accessListNumber");
  add("permitOrDeny");
  add("protocol");
  address("sourceIpAddress", "sourceWildcardMask");
  if (acl.Has("sourceOperator")) {
    add("sourceOperator");
    add("sourcePort");
  }
  address("destIpAddress", "destWildcardMask");
  if (acl.Has("destOperator")) {
    add("destOperator");
    add("destPort");
  }
  std::string out;
  for (const std::string& p : parts) out += (out.empty() ? "" : " ") + p;
  return out;
}

std::string ShowRunningConfig(const ModelGraph& graph,
                              const OspfBindings& bindings,
                              const NodeRecord& config) {
  TemplateScope scope;
  scope.values["HostName"] = graph.HostNameOf(config);

  for (const NodeRecord* stp :
       graph.Neighbors(config.name, NodeKind::kStpSetting)) {
    auto line = [&](std::string text) {
      TemplateScope l;
      l.values["Line"] = std::move(text);
      scope.lists["stp"].push_back(std::move(l));
    };
    if (const std::string* mode = stp->Field("Mode")) {
      line("spanning-tree mode " + *mode);
    }
    const std::string* vlan = stp->Field("Vlan");
    const std::string* priority = stp->Field("bridgePriority");
    if (priority != nullptr) {
      line("spanning-tree vlan " + (vlan ? *vlan : std::string("1-4094")) +
           " priority " + *priority);
    }
  }

  for (const NodeRecord* vlan : SortedVlans(graph, config)) {
    TemplateScope row;
    Put(row, "Num", *vlan, "num");
    Put(row, "Name", *vlan, "name");
    scope.lists["vlans"].push_back(std::move(row));
  }

  for (const NodeRecord* es : SortedPorts(graph, config)) {
    std::vector<std::string> lines;
    if (const std::string* ip = es->Field("ipAddress")) {
      lines.push_back("ip address " + *ip +
                      (es->Has("subnetMask") ? " " + FieldOr(*es, "subnetMask")
                                             : ""));
    }
    AccessGroupLine(*es, lines);
    if (IsTrue(*es, "ipVirtualReassembly")) lines.push_back("ip virtual-reassembly");
    OspfInterfaceLines(graph, bindings, *es, lines);
    if (IsTrue(*es, "switchportTrunkEncapsulation")) {
      lines.push_back("switchport trunk encapsulation dot1q");
    }
    if (const std::string* v = es->Field("accessVlan")) {
      lines.push_back("switchport access vlan " + *v);
    }
    if (const std::string* v = es->Field("nativeVlan")) {
      lines.push_back("switchport trunk native vlan " + *v);
    }
    if (const std::string* v = es->Field("allowedVlan")) {
      lines.push_back("switchport trunk allowed vlan " + *v);
    }
    if (const std::string* v = es->Field("mode")) {
      lines.push_back("switchport mode " + *v);
    }
    if (const std::string* v = es->Field("mtu")) lines.push_back("mtu " + *v);
    if (const std::string* v = es->Field("speed")) lines.push_back("speed " + *v);
    if (const std::string* v = es->Field("duplex")) lines.push_back("duplex " + *v);
    if (IsTrue(*es, "shutdown")) lines.push_back("shutdown");
    scope.lists["interfaces"].push_back(
        InterfaceBlock(InterfaceName(graph, *es), lines));
  }

  for (const NodeRecord* svi : SortedSvis(graph, config)) {
    std::vector<std::string> lines;
    if (const std::string* ip = svi->Field("ipAddress")) {
      lines.push_back("ip address " + *ip +
                      (svi->Has("subnetMask") ? " " + FieldOr(*svi, "subnetMask")
                                              : ""));
    }
    AccessGroupLine(*svi, lines);
    if (IsTrue(*svi, "ipNatInside")) lines.push_back("ip nat inside");
    if (IsTrue(*svi, "ipVirtualReassembly")) lines.push_back("ip virtual-reassembly");
    if (const std::string* v = svi->Field("ipTcpAdjustMss")) {
      lines.push_back("ip tcp adjust-mss " + *v);
    }
    OspfInterfaceLines(graph, bindings, *svi, lines);
    if (IsTrue(*svi, "shutdown")) lines.push_back("shutdown");
    scope.lists["interfaces"].push_back(
        InterfaceBlock(L3InterfaceName(graph, *svi), lines));
  }

  for (const NodeRecord* ospf :
       graph.Neighbors(config.name, NodeKind::kOspfSetting)) {
    TemplateScope block;
    Put(block, "ProcessId", *ospf, "processId");
    Put(block, "RouterId", *ospf, "routerId");
    std::vector<std::string> lines;
    for (const NodeRecord* vl :
         graph.Neighbors(ospf->name, NodeKind::kOspfVirtualLink)) {
      lines.push_back("area " + FieldOr(*vl, "areaId") + " virtual-link " +
                      FieldOr(*vl, "routerId"));
    }
    auto statements =
        graph.Neighbors(ospf->name, NodeKind::kOspfInterfaceSetting);
    std::set<std::string> stub_lines;
    for (const NodeRecord* ois : statements) {
      std::string stub = FieldOr(*ois, "stub", "none");
      if (stub == "none") continue;
      std::string line = "area " + FieldOr(*ois, "areaId") + " stub";
      if (stub == "no-summary") line += " no-summary";
      if (stub_lines.insert(line).second) lines.push_back(line);
    }
    for (const NodeRecord* ois : statements) {
      lines.push_back("network " + FieldOr(*ois, "ipAddress") + " " +
                      FieldOr(*ois, "wildcardMask") + " area " +
                      FieldOr(*ois, "areaId"));
    }
    for (const std::string& line : lines) {
      TemplateScope l;
      l.values["Line"] = line;
      block.lists["lines"].push_back(std::move(l));
    }
    scope.lists["ospf"].push_back(std::move(block));
  }

  for (const NodeRecord* route :
       graph.Neighbors(config.name, NodeKind::kIpRoute)) {
    TemplateScope row;
    Put(row, "Network", *route, "Network");
    Put(row, "Mask", *route, "addressPrefix");
    Put(row, "NextHop", *route, "nextHopAddress");
    scope.lists["routes"].push_back(std::move(row));
  }

  auto acls = graph.Neighbors(config.name, NodeKind::kAccessList);
  std::stable_sort(acls.begin(), acls.end(), [](auto* a, auto* b) {
    return ParseInt(a->Field("accessListNumber")).value_or(0) <
           ParseInt(b->Field("accessListNumber")).value_or(0);
  });
  for (const NodeRecord* acl : acls) {
    TemplateScope row;
    std::string line = AccessListLine(*acl);
    if (!acl->Has("accessListNumber")) continue;
    row.values["Line"] = line;
    scope.lists["acls"].push_back(std::move(row));
  }
  return RenderTemplate(Template("show_running_config.tmpl"), scope);
}

// ---- show spanning-tree -------------------------------------------------

struct StpView {
  std::string protocol = "ieee";
  int priority = 32768;
  const std::string* mac = nullptr;
};

StpView StpFor(const ModelGraph& graph, const NodeRecord& config, int vlan) {
  StpView view;
  const NodeRecord* general = nullptr;
  const NodeRecord* specific = nullptr;
  for (const NodeRecord* stp :
       graph.Neighbors(config.name, NodeKind::kStpSetting)) {
    if (!stp->Has("Vlan")) {
      if (general == nullptr) general = stp;
    } else if (ParseVlanList(FieldOr(*stp, "Vlan")).contains(vlan)) {
      if (specific == nullptr) specific = stp;
    }
  }
  for (const NodeRecord* stp : {general, specific}) {
    if (stp == nullptr) continue;
    if (const std::string* mode = stp->Field("Mode")) {
      view.protocol = *mode == "rapid-pvst" ? "rstp"
                      : *mode == "mst"      ? "mstp"
                                            : "ieee";
    }
    if (auto p = ParseInt(stp->Field("bridgePriority"))) view.priority = *p;
    if (const std::string* mac = stp->Field("macAddress")) view.mac = mac;
  }
  return view;
}

std::string ShowSpanningTree(const ModelGraph& graph, const NodeRecord& config) {
  SegmentIndex segments(graph);
  std::set<int> active;
  for (const NodeRecord* es : SortedPorts(graph, config)) {
    for (int v : CarriedVlans(graph, *es)) active.insert(v);
  }
  TemplateScope scope;
  for (int vlan : active) {
    StpView self = StpFor(graph, config, vlan);
    TemplateScope block;
    char id[16];
    std::snprintf(id, sizeof id, "%04d", vlan);
    block.values["VlanId"] = id;
    block.values["Vlan"] = std::to_string(vlan);
    block.values["Protocol"] = self.protocol;
    block.values["Priority"] = std::to_string(self.priority);
    block.values["BridgePriority"] = std::to_string(self.priority + vlan);
    if (self.mac) block.values["BridgeAddress"] = *self.mac;

    // Root: lowest bridge priority, then MAC address, then host name.
    const NodeRecord* root = &config;
    StpView root_view = self;
    auto rank = [&](const NodeRecord& c, const StpView& v) {
      return std::make_tuple(v.priority, v.mac ? 0 : 1,
                             v.mac ? Lower(*v.mac) : std::string(),
                             graph.HostNameOf(c));
    };
    if (auto seg = segments.SegmentOfVlan(config.name, vlan)) {
      for (const std::string& name : segments.segments()[*seg].Configs()) {
        const NodeRecord& other = graph.At(name);
        StpView view = StpFor(graph, other, vlan);
        if (rank(other, view) < rank(*root, root_view)) {
          root = &other;
          root_view = view;
        }
      }
    }
    block.values["RootPriority"] = std::to_string(root_view.priority + vlan);
    if (root == &config) {
      block.values["IsRoot"] = "";
    } else {
      block.values["RootBridge"] = graph.HostNameOf(*root);
    }
    if (root_view.mac) block.values["RootAddress"] = *root_view.mac;

    for (const NodeRecord* es : SortedPorts(graph, config)) {
      if (!CarriedVlans(graph, *es).contains(vlan)) continue;
      TemplateScope row;
      row.values["Interface"] = ShortInterfaceName(graph, *es);
      row.values["Mode"] = ModeOf(*es) == PortMode::kTrunk ? "trunk" : "access";
      std::string peer = "-";
      if (const NodeRecord* link = LinkOf(graph, *es)) {
        for (const NodeRecord* end :
             graph.Neighbors(link->name, NodeKind::kEthernetSetting)) {
          if (end == es) continue;
          const NodeRecord* pc = graph.FindConfigOf(end->name);
          peer = (pc ? graph.HostNameOf(*pc) + " " : std::string()) +
                 ShortInterfaceName(graph, *end);
        }
      }
      row.values["Peer"] = peer;
      block.lists["interfaces"].push_back(std::move(row));
    }
    scope.lists["vlans"].push_back(std::move(block));
  }
  return RenderTemplate(Template("show_spanning_tree.tmpl"), scope);
}

// ---- OSPF ---------------------------------------------------------------

struct Neighbor {
  const OspfInterfaceBinding* local;
  const OspfInterfaceBinding* remote;
  OspfRole remote_role;
  OspfRole local_role;
  bool elects;
};

// Adjacencies of `config`: OSPF interfaces of other devices in the same
// segment whose area, subnet and timers agree.
std::vector<Neighbor> NeighborsOf(const ModelGraph& graph,
                                  const OspfBindings& bindings,
                                  const NodeRecord& config) {
  SegmentIndex segments(graph);
  std::vector<Neighbor> out;
  for (const OspfInterfaceBinding& local : bindings.bindings) {
    if (local.config != config.name) continue;
    auto seg = segments.SegmentOfNode(local.interface);
    if (!seg) continue;
    const bool elects = ElectsDr(graph.At(local.ois));
    std::optional<ElectionResult> election =
        ElectFor(graph, bindings, local.interface);
    for (const OspfInterfaceBinding& remote : bindings.bindings) {
      if (remote.config == local.config ||
          segments.SegmentOfNode(remote.interface) != seg) {
        continue;
      }
      if (remote.area != local.area || remote.hello != local.hello ||
          remote.dead != local.dead || remote.subnet != local.subnet) {
        continue;
      }
      out.push_back({&local, &remote, election->RoleOf(remote.interface),
                     election->RoleOf(local.interface), elects});
    }
  }
  return out;
}

std::string ShowIpOspfNeighbor(const ModelGraph& graph,
                               const OspfBindings& bindings,
                               const NodeRecord& config) {
  std::vector<Neighbor> neighbors = NeighborsOf(graph, bindings, config);
  TemplateScope scope;
  for (const Neighbor& n : neighbors) {
    TemplateScope row;
    row.values["NeighborId"] = FieldOr(graph.At(n.remote->ospf), "routerId");
    row.values["Priority"] = std::to_string(n.remote->priority);
    std::string state;
    if (!n.elects) {
      state = "FULL/  -";
    } else if (n.remote_role == OspfRole::kDrOther &&
               n.local_role == OspfRole::kDrOther) {
      state = "2WAY/DROTHER";
    } else {
      state = "FULL/" + std::string(RoleName(n.remote_role));
    }
    row.values["State"] = state;
    row.values["Address"] = n.remote->ip.ToString();
    row.values["Interface"] =
        L3InterfaceName(graph, graph.At(n.local->interface));
    scope.lists["neighbors"].push_back(std::move(row));
  }
  return RenderTemplate(Template("show_ip_ospf_neighbor.tmpl"), scope);
}

std::string ShowIpProtocols(const ModelGraph& graph,
                            const OspfBindings& bindings,
                            const NodeRecord& config) {
  std::vector<Neighbor> neighbors = NeighborsOf(graph, bindings, config);
  TemplateScope scope;
  for (const NodeRecord* ospf :
       graph.Neighbors(config.name, NodeKind::kOspfSetting)) {
    TemplateScope block;
    Put(block, "ProcessId", *ospf, "processId");
    Put(block, "RouterId", *ospf, "routerId");
    std::map<std::string, bool> areas;  // area -> stub
    for (const NodeRecord* ois :
         graph.Neighbors(ospf->name, NodeKind::kOspfInterfaceSetting)) {
      TemplateScope row;
      Put(row, "Network", *ois, "ipAddress");
      Put(row, "Wildcard", *ois, "wildcardMask");
      Put(row, "AreaId", *ois, "areaId");
      block.lists["networks"].push_back(std::move(row));
      bool stub = FieldOr(*ois, "stub", "none") != "none";
      areas[FieldOr(*ois, "areaId")] |= stub;
    }
    std::size_t stubs = std::count_if(areas.begin(), areas.end(),
                                      [](const auto& a) { return a.second; });
    block.values["AreaCount"] = std::to_string(areas.size());
    block.values["NormalAreas"] = std::to_string(areas.size() - stubs);
    block.values["StubAreas"] = std::to_string(stubs);
    std::set<std::string> sources;
    for (const Neighbor& n : neighbors) {
      if (n.local->ospf == ospf->name) {
        sources.insert(FieldOr(graph.At(n.remote->ospf), "routerId"));
      }
    }
    std::vector<std::string> sorted(sources.begin(), sources.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
      auto ia = Ipv4::Parse(a);
      auto ib = Ipv4::Parse(b);
      if (ia && ib) return *ia < *ib;
      return a < b;
    });
    for (const std::string& id : sorted) {
      TemplateScope row;
      row.values["Gateway"] = id;
      row.values["Distance"] = "110";
      block.lists["sources"].push_back(std::move(row));
    }
    scope.lists["processes"].push_back(std::move(block));
  }
  return RenderTemplate(Template("show_ip_protocols.tmpl"), scope);
}

std::string ShowIpOspfInterface(const ModelGraph& graph,
                                const OspfBindings& bindings,
                                const NodeRecord& interface) {
  const std::string name = L3InterfaceName(graph, interface);
  const OspfInterfaceBinding* b = bindings.Of(interface.name);
  if (b == nullptr) return "%OSPF: OSPF not enabled on " + name + "\n";
  const NodeRecord& ois = graph.At(b->ois);
  const NodeRecord& ospf = graph.At(b->ospf);

  TemplateScope scope;
  scope.values["InterfaceName"] = name;
  Put(scope, "IpAddress", interface, "ipAddress");
  if (auto mask = Ipv4::Parse(FieldOr(interface, "subnetMask"))) {
    if (auto len = MaskPrefixLength(*mask)) {
      scope.values["PrefixLength"] = std::to_string(*len);
    }
  }
  Put(scope, "AreaId", ois, "areaId");
  Put(scope, "ProcessId", ospf, "processId");
  Put(scope, "RouterId", ospf, "routerId");
  scope.values["NetworkType"] = NetworkType(ois);
  scope.values["Priority"] = std::to_string(b->priority);
  scope.values["Hello"] = std::to_string(b->hello);
  scope.values["Dead"] = std::to_string(b->dead);
  if (ElectsDr(ois)) {
    ElectionResult election = *ElectFor(graph, bindings, interface.name);
    scope.values["State"] = std::string(RoleName(election.RoleOf(interface.name)));
    auto id_of = [&](const ElectionMember& m) {
      const OspfInterfaceBinding* mb = bindings.Of(m.interface);
      return FieldOr(graph.At(mb->ospf), "routerId");
    };
    if (election.dr) {
      scope.values["DrId"] = id_of(*election.dr);
      scope.values["DrAddress"] = election.dr->address.ToString();
    }
    if (election.bdr) {
      scope.values["BdrId"] = id_of(*election.bdr);
      scope.values["BdrAddress"] = election.bdr->address.ToString();
    }
  } else {
    scope.values["State"] = NetworkType(ois);
  }
  return RenderTemplate(Template("show_ip_ospf_interface.tmpl"), scope);
}

std::vector<std::string> Words(std::string_view text) {
  std::vector<std::string> words;
  std::istringstream in{std::string(text)};
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

}  // namespace

UnknownCommand::UnknownCommand(std::string_view command)
    : Error([&] {
        std::string msg = "unknown command '" + std::string(command) +
                          "'; supported forms:";
        for (std::string_view form : kForms) msg += "\n  " + std::string(form);
        return msg;
      }()) {}

std::span<const std::string_view> CommandForms() { return kForms; }

const NodeRecord& ResolveConfig(const ModelGraph& graph, std::string_view name) {
  if (const NodeRecord* node = graph.Find(name)) {
    if (node->kind == NodeKind::kConfig) return *node;
  }
  for (const NodeRecord* config : graph.NodesOfKind(NodeKind::kConfig)) {
    if (graph.HostNameOf(*config) == name) return *config;
  }
  throw UnknownNode(std::string(name));
}

const NodeRecord& ResolveInterface(const ModelGraph& graph,
                                   const NodeRecord& config,
                                   std::string_view name) {
  if (const NodeRecord* node = graph.Find(name)) {
    const NodeRecord* owner = graph.FindConfigOf(node->name);
    if ((node->kind == NodeKind::kEthernetSetting ||
         node->kind == NodeKind::kVlanSetting) &&
        owner != nullptr && owner->name == config.name) {
      return *node;
    }
  }
  const std::string wanted = Lower(name);
  for (const NodeRecord* es :
       graph.Neighbors(config.name, NodeKind::kEthernetSetting)) {
    if (Lower(InterfaceName(graph, *es)) == wanted ||
        Lower(ShortInterfaceName(graph, *es)) == wanted) {
      return *es;
    }
  }
  for (const NodeRecord* svi :
       graph.Neighbors(config.name, NodeKind::kVlanSetting)) {
    if (Lower(L3InterfaceName(graph, *svi)) == wanted) return *svi;
  }
  throw UnknownNode(std::string(name));
}

std::string RenderShow(const ModelGraph& graph, std::string_view command) {
  std::vector<std::string> w = Words(command);
  auto is = [&](std::initializer_list<std::string_view> prefix,
                std::size_t total) {
    if (w.size() != total) return false;
    std::size_t i = 0;
    for (std::string_view p : prefix) {
      if (w[i++] != p) return false;
    }
    return true;
  };
  if (is({"show", "vlan", "brief", "all"}, 4)) return ShowVlanBriefAll(graph);
  if (is({"show", "vlan", "brief"}, 4)) {
    return ShowVlanBrief(graph, ResolveConfig(graph, w[3]));
  }
  if (is({"show", "vlan"}, 3)) {
    std::string arg = w[2];
    auto num = ParseInt(&arg);
    if (!num) throw UnknownCommand(command);
    return ShowVlan(graph, BindOspf(graph), *num);
  }
  if (is({"show", "running", "config"}, 4)) {
    return ShowRunningConfig(graph, BindOspf(graph), ResolveConfig(graph, w[3]));
  }
  if (is({"show", "running-config"}, 3)) {
    return ShowRunningConfig(graph, BindOspf(graph), ResolveConfig(graph, w[2]));
  }
  if (is({"show", "spanning-tree"}, 3)) {
    return ShowSpanningTree(graph, ResolveConfig(graph, w[2]));
  }
  if (is({"show", "ip", "protocols"}, 4)) {
    return ShowIpProtocols(graph, BindOspf(graph), ResolveConfig(graph, w[3]));
  }
  if (is({"show", "ip", "ospf", "neighbor"}, 5)) {
    return ShowIpOspfNeighbor(graph, BindOspf(graph),
                              ResolveConfig(graph, w[4]));
  }
  if (is({"show", "ip", "ospf", "interface"}, 6)) {
    const NodeRecord& config = ResolveConfig(graph, w[4]);
    return ShowIpOspfInterface(graph, BindOspf(graph),
                               ResolveInterface(graph, config, w[5]));
  }
  throw UnknownCommand(command);
}

}  // namespace ncverify
