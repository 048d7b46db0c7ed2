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

#ifndef NCVERIFY_ELECTION_H_
#define NCVERIFY_ELECTION_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ncverify/ipv4.h"
#include "ncverify/model.h"
#include "ncverify/ospf_checks.h"

namespace ncverify {

// An OSPF interface taking part in a DR/BDR election.
struct ElectionMember {
  std::string interface;  // VlanSetting or EthernetSetting
  std::string config;
  Ipv4 router_id;
  Ipv4 address;
  int priority = kDefaultPriority;
};

enum class OspfRole { kDr, kBdr, kDrOther };
std::string_view RoleName(OspfRole role);  // "DR", "BDR", "DROTHER"

struct ElectionResult {
  std::optional<ElectionMember> dr;
  std::optional<ElectionMember> bdr;
  std::map<std::string, OspfRole> roles;  // by interface

  OspfRole RoleOf(std::string_view interface) const;
};

// Higher priority wins, then the higher router id; priority 0 never
// becomes DR or BDR. The outcome does not depend on member order. With no
// eligible member both roles are empty.
ElectionResult Elect(std::vector<ElectionMember> members);

// Election on the segment of `interface`: its members are the OSPF-enabled
// interfaces of the same layer-2 segment (the interface itself when it is not
// in any segment). Empty when `interface` has no binding.
std::optional<ElectionResult> ElectFor(const ModelGraph& graph,
                                       const OspfBindings& bindings,
                                       std::string_view interface);

}  // namespace ncverify

#endif  // NCVERIFY_ELECTION_H_
