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

#ifndef NCVERIFY_VERIFIER_H_
#define NCVERIFY_VERIFIER_H_

#include <string>
#include <vector>

#include "ncverify/model.h"
#include "ncverify/rule_engine.h"
#include "ncverify/violation.h"

namespace ncverify {

struct VerifyOptions {
  RuleFilter filter;
  // Run the multi-node and OSPF layers even when single-node errors exist.
  bool ignore_gate = false;
  const RuleMatrix* matrix = nullptr;  // defaults to RuleMatrix::Default()
};

// Results of the three layers, run in order. The later layers only run when
// the single-node layer reported no errors (or the gate is overridden).
struct Report {
  std::vector<Violation> single_node;
  std::vector<Violation> multi_node;
  std::vector<Violation> ospf;
  bool gate_passed = false;
  bool later_layers_run = false;

  std::vector<Violation> All() const;
  std::size_t size() const {
    return single_node.size() + multi_node.size() + ospf.size();
  }
  bool clean() const { return size() == 0; }
};

Report Verify(const ModelGraph& graph, const VerifyOptions& options = {});

// Violations grouped by the device of their first culprit, then rule id and
// node name, ending with a count line ("0 violations" when clean).
std::string FormatReport(const ModelGraph& graph, const Report& report);
// {"model", "gatePassed", "layers": {...}, "summary": {...}}; multiNode and
// ospf are omitted when those layers did not run.
std::string ReportToJson(const Report& report, const std::string& model_path);

}  // namespace ncverify

#endif  // NCVERIFY_VERIFIER_H_
