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

#include "ncverify/election.h"

#include <algorithm>
#include <tuple>

#include "ncverify/segments.h"

namespace ncverify {

std::string_view RoleName(OspfRole role) {
  switch (role) {
    case OspfRole::kDr:
      return "DR";
    case OspfRole::kBdr:
      return "BDR";
    case OspfRole::kDrOther:
      return "DROTHER";
  }
  return "DROTHER";
}

OspfRole ElectionResult::RoleOf(std::string_view interface) const {
  auto it = roles.find(std::string(interface));
  return it == roles.end() ? OspfRole::kDrOther : it->second;
}

ElectionResult Elect(std::vector<ElectionMember> members) {
  // Full ordering so that equal (priority, router id) pairs, which only a
  // misconfiguration produces, still resolve independently of input order.
  auto rank = [](const ElectionMember& m) {
    return std::make_tuple(m.priority, m.router_id, m.address, m.interface);
  };
  std::sort(members.begin(), members.end(),
            [&](const auto& a, const auto& b) { return rank(a) > rank(b); });
  ElectionResult result;
  for (const ElectionMember& m : members) {
    OspfRole role = OspfRole::kDrOther;
    if (m.priority > 0) {
      if (!result.dr) {
        result.dr = m;
        role = OspfRole::kDr;
      } else if (!result.bdr) {
        result.bdr = m;
        role = OspfRole::kBdr;
      }
    }
    result.roles[m.interface] = role;
  }
  return result;
}

std::optional<ElectionResult> ElectFor(const ModelGraph& graph,
                                       const OspfBindings& bindings,
                                       std::string_view interface) {
  if (bindings.Of(interface) == nullptr) return std::nullopt;
  SegmentIndex segments(graph);
  auto segment = segments.SegmentOfNode(interface);
  std::vector<ElectionMember> members;
  for (const OspfInterfaceBinding& b : bindings.bindings) {
    bool same = b.interface == interface ||
                (segment && segments.SegmentOfNode(b.interface) == segment);
    if (!same) continue;
    const NodeRecord& ospf = graph.At(b.ospf);
    const std::string* id = ospf.Field("routerId");
    auto router_id = id ? Ipv4::Parse(*id) : std::nullopt;
    members.push_back({b.interface, b.config, router_id.value_or(Ipv4()), b.ip,
                       b.priority});
  }
  return Elect(std::move(members));
}

}  // namespace ncverify
