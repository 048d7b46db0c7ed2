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

#include "ncverify/template.h"

#include <gtest/gtest.h>

#include "ncverify/embedded_data.h"

namespace ncverify {
namespace {

TEST(TemplateTest, SubstitutesValues) {
  TemplateScope scope{{{"Name", "Vlan20"}, {"Area", "1"}}, {}};
  EXPECT_EQ(RenderTemplate("<Name>\n  Area <Area>\n", scope),
            "Vlan20\n  Area 1\n");
}

TEST(TemplateTest, PadsAndAligns) {
  TemplateScope scope{{{"A", "ab"}, {"B", "7"}}, {}};
  EXPECT_EQ(RenderTemplate("<A|5>|<B|-3>|\n", scope), "ab   |  7|\n");
}

TEST(TemplateTest, DropsLinesWithMissingValues) {
  TemplateScope scope{{{"A", "x"}}, {}};
  EXPECT_EQ(RenderTemplate("a <A>\nb <Missing>\nc\n", scope), "a x\nc\n");
}

TEST(TemplateTest, EmptyValueKeepsLine) {
  TemplateScope scope{{{"A", ""}}, {}};
  EXPECT_EQ(RenderTemplate("x<A>\n", scope), "x\n");
}

TEST(TemplateTest, RepeatsEachBlocksWithNestedScopes) {
  TemplateScope port1{{{"P", "1"}}, {}};
  TemplateScope port2{{{"P", "2"}}, {}};
  TemplateScope scope{{{"Host", "h"}}, {{"ports", {port1, port2}}}};
  EXPECT_EQ(RenderTemplate("@# comment\n@each ports\n<Host> <P>\n@end\n", scope),
            "h 1\nh 2\n");
}

TEST(TemplateTest, NestedEach) {
  TemplateScope inner{{{"V", "v"}}, {}};
  TemplateScope outer{{{"O", "o"}}, {{"inner", {inner, inner}}}};
  TemplateScope scope{{}, {{"outer", {outer}}}};
  EXPECT_EQ(RenderTemplate("@each outer\n<O>\n@each inner\n <V>\n@end\n@end\n",
                           scope),
            "o\n v\n v\n");
}

TEST(TemplateTest, StripsTrailingWhitespace) {
  TemplateScope scope{{{"A", "x"}}, {}};
  EXPECT_EQ(RenderTemplate("<A|8>\n", scope), "x\n");
}

TEST(TemplateTest, UnbalancedBlocksThrow) {
  EXPECT_THROW(RenderTemplate("@each xs\nline\n", {}), TemplateError);
  EXPECT_THROW(RenderTemplate("@end\n", {}), TemplateError);
}

TEST(TemplateTest, BundledTemplatesAreBalanced) {
  for (const char* name :
       {"show_vlan_brief", "show_vlan_brief_all", "show_vlan",
        "show_running_config", "show_spanning_tree", "show_ip_protocols",
        "show_ip_ospf_neighbor", "show_ip_ospf_interface"}) {
    std::string path = std::string("data/templates/") + name + ".tmpl";
    EXPECT_NO_THROW(RenderTemplate(EmbeddedData(path), {})) << name;
  }
}

}  // namespace
}  // namespace ncverify
