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

#ifndef NCVERIFY_VIOLATION_H_
#define NCVERIFY_VIOLATION_H_

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ncverify {

enum class Severity { kError, kWarning };

std::string_view SeverityName(Severity severity);

// A configuration value implicated in a violation. `value` is the raw value
// as authored; it is empty when the culprit is a missing item.
struct Culprit {
  std::string node;
  std::string item;
  std::string value;

  friend auto operator<=>(const Culprit&, const Culprit&) = default;
};

struct Violation {
  std::string rule_id;  // "LEX.FORMAT", "INTRA.a", "MULTI.4", "OSPF.3", ...
  Severity severity = Severity::kError;
  std::string message;
  std::vector<Culprit> culprits;

  friend bool operator==(const Violation&, const Violation&) = default;
};

// Verification item a rule id belongs to: "MULTI.2-same" -> "MULTI.2".
std::string_view RuleItem(std::string_view rule_id);

// Rule ids switched off for a run. Disabling an item ("MULTI.2") disables
// all of its variants.
class RuleFilter {
 public:
  RuleFilter() = default;
  explicit RuleFilter(std::set<std::string, std::less<>> disabled)
      : disabled_(std::move(disabled)) {}

  bool Enabled(std::string_view rule_id) const;
  const std::set<std::string, std::less<>>& disabled() const {
    return disabled_;
  }

 private:
  std::set<std::string, std::less<>> disabled_;
};

// Drops violations whose rule is disabled.
std::vector<Violation> Filtered(std::vector<Violation> violations,
                                const RuleFilter& filter);

// Stable ordering used by every layer: rule item, then first culprit, then
// message.
void SortViolations(std::vector<Violation>& violations);

}  // namespace ncverify

#endif  // NCVERIFY_VIOLATION_H_
