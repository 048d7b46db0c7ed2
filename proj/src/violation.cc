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

#include "ncverify/violation.h"

#include <algorithm>
#include <charconv>
#include <tuple>

namespace ncverify {

std::string_view SeverityName(Severity severity) {
  return severity == Severity::kError ? "error" : "warning";
}

std::string_view RuleItem(std::string_view rule_id) {
  return rule_id.substr(0, rule_id.find('-'));
}

bool RuleFilter::Enabled(std::string_view rule_id) const {
  return !disabled_.contains(rule_id) && !disabled_.contains(RuleItem(rule_id));
}

std::vector<Violation> Filtered(std::vector<Violation> violations,
                                const RuleFilter& filter) {
  std::erase_if(violations, [&](const Violation& v) {
    return !filter.Enabled(v.rule_id);
  });
  return violations;
}

namespace {

// "OSPF.10" sorts after "OSPF.9".
std::tuple<std::string_view, int, std::string_view> RuleKey(
    std::string_view rule_id) {
  std::string_view item = RuleItem(rule_id);
  auto dot = item.find('.');
  std::string_view family = item.substr(0, dot);
  int number = 0;
  if (dot != std::string_view::npos) {
    std::string_view rest = item.substr(dot + 1);
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(),
                                     number);
    if (ec != std::errc() || ptr != rest.data() + rest.size()) number = 0;
  }
  return {family, number, rule_id};
}

}  // namespace

void SortViolations(std::vector<Violation>& violations) {
  std::stable_sort(violations.begin(), violations.end(),
                   [](const Violation& a, const Violation& b) {
                     auto ka = RuleKey(a.rule_id);
                     auto kb = RuleKey(b.rule_id);
                     if (ka != kb) return ka < kb;
                     if (a.culprits != b.culprits) return a.culprits < b.culprits;
                     return a.message < b.message;
                   });
}

}  // namespace ncverify
