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

#ifndef NCVERIFY_SHOW_RENDERER_H_
#define NCVERIFY_SHOW_RENDERER_H_

#include <span>
#include <string>
#include <string_view>

#include "ncverify/errors.h"
#include "ncverify/model.h"

namespace ncverify {

class UnknownCommand : public Error {
 public:
  explicit UnknownCommand(std::string_view command);
};

// The supported command forms, for usage messages:
//   show vlan brief <config>
//   show vlan brief all
//   show vlan <vlan id>
//   show running config <config>        ("running-config" also accepted)
//   show spanning-tree <config>
//   show ip protocols <config>
//   show ip ospf neighbor <config>
//   show ip ospf interface <config> <EthernetSetting>
//   show ip ospf interface <config> <VlanSetting>
std::span<const std::string_view> CommandForms();

// Device-style output of `command` computed from the model. <config> is a
// Config value name or host name; an interface is a node name or its device
// name ("Vlan20", "FastEthernet2", "Fa2"). Throws UnknownCommand, or
// UnknownNode for names not in the model.
std::string RenderShow(const ModelGraph& graph, std::string_view command);

// The Config named by value name or host name. Throws UnknownNode.
const NodeRecord& ResolveConfig(const ModelGraph& graph, std::string_view name);
// An EthernetSetting or VlanSetting of `config`. Throws UnknownNode.
const NodeRecord& ResolveInterface(const ModelGraph& graph,
                                   const NodeRecord& config,
                                   std::string_view name);

}  // namespace ncverify

#endif  // NCVERIFY_SHOW_RENDERER_H_
