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

#ifndef NCVERIFY_TOPOLOGY_CHECKS_H_
#define NCVERIFY_TOPOLOGY_CHECKS_H_

#include <vector>

#include "ncverify/model.h"
#include "ncverify/segments.h"
#include "ncverify/violation.h"

namespace ncverify {

// Multi-node checks. Each assumes the single-node layer reported no errors.
//
//   MULTI.1       the same address twice on one device
//   MULTI.2-same  the same address on several devices within one segment
//   MULTI.2-diff  the same address on several devices in different segments
std::vector<Violation> CheckDuplicateIp(const ModelGraph& graph);

//   MULTI.4            trunk peers whose allowedVlan ∩ defined VLANs differ
//   MULTI.4-undefined  allowedVlan names a VLAN the device does not define
std::vector<Violation> CheckAllowedVlan(const ModelGraph& graph);

//   MULTI.5  access VLANs differ, or one end is access and the other trunk
//   MULTI.6  native VLANs of trunk peers differ (absent means 1)
//   MULTI.7  duplex differs (compared only when both ends are explicit)
//   MULTI.8  speed differs (compared only when both ends are explicit)
std::vector<Violation> CheckPairwiseLink(const ModelGraph& graph);

//   MULTI.3   duplicate Vlan num under one Config
//   MULTI.9   layer-2 loop within one VLAN (warning)
//   MULTI.10  overlapping prefixes in different segments
//   MULTI.11  different networks within one segment
//   MULTI.12  uncabled interface that is not shut down (warning)
std::vector<Violation> CheckL3Structure(const ModelGraph& graph);

// All of the above, filtered and sorted.
std::vector<Violation> CheckMultiNode(const ModelGraph& graph,
                                      const RuleFilter& filter = {});

}  // namespace ncverify

#endif  // NCVERIFY_TOPOLOGY_CHECKS_H_
