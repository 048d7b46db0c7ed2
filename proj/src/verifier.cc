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

#include "ncverify/verifier.h"

#include <algorithm>
#include <map>

#include "json.hpp"
#include "ncverify/ospf_checks.h"
#include "ncverify/topology_checks.h"

namespace ncverify {
namespace {

bool HasError(const std::vector<Violation>& violations) {
  return std::any_of(violations.begin(), violations.end(),
                     [](const Violation& v) {
                       return v.severity == Severity::kError;
                     });
}

std::string DeviceOf(const ModelGraph& graph, const Violation& v) {
  for (const Culprit& c : v.culprits) {
    if (c.node.empty()) continue;
    if (const NodeRecord* config = graph.FindConfigOf(c.node)) {
      return graph.HostNameOf(*config);
    }
  }
  return "(network)";
}

nlohmann::ordered_json ToJson(const std::vector<Violation>& violations) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const Violation& v : violations) {
    nlohmann::ordered_json culprits = nlohmann::ordered_json::array();
    for (const Culprit& c : v.culprits) {
      culprits.push_back({{"node", c.node}, {"item", c.item}, {"value", c.value}});
    }
    out.push_back({{"ruleId", v.rule_id},
                   {"severity", std::string(SeverityName(v.severity))},
                   {"message", v.message},
                   {"culprits", std::move(culprits)}});
  }
  return out;
}

}  // namespace

std::vector<Violation> Report::All() const {
  std::vector<Violation> out = single_node;
  out.insert(out.end(), multi_node.begin(), multi_node.end());
  out.insert(out.end(), ospf.begin(), ospf.end());
  return out;
}

Report Verify(const ModelGraph& graph, const VerifyOptions& options) {
  const RuleMatrix& matrix =
      options.matrix ? *options.matrix : RuleMatrix::Default();
  Report report;
  report.single_node =
      Filtered(CheckAllSingle(graph, matrix), options.filter);
  report.gate_passed = !HasError(report.single_node);
  if (report.gate_passed || options.ignore_gate) {
    report.later_layers_run = true;
    report.multi_node = CheckMultiNode(graph, options.filter);
    report.ospf = CheckOspf(graph, options.filter);
  }
  return report;
}

std::string FormatReport(const ModelGraph& graph, const Report& report) {
  struct Entry {
    std::string device;
    const Violation* violation;
  };
  std::vector<Violation> all = report.All();
  std::vector<Entry> entries;
  for (const Violation& v : all) entries.push_back({DeviceOf(graph, v), &v});
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) {
                     if (a.device != b.device) return a.device < b.device;
                     return a.violation->rule_id < b.violation->rule_id;
                   });

  std::string out;
  std::string current;
  std::size_t errors = 0;
  for (const Entry& e : entries) {
    if (e.device != current || &e == &entries.front()) {
      current = e.device;
      out += current + ":\n";
    }
    const Violation& v = *e.violation;
    if (v.severity == Severity::kError) ++errors;
    out += "  [" + std::string(SeverityName(v.severity)) + "] " + v.rule_id +
           " " + v.message + "\n";
    for (const Culprit& c : v.culprits) {
      out += "      " + (c.node.empty() ? std::string("-") : c.node) + "." +
             c.item + " = \"" + c.value + "\"\n";
    }
  }
  if (!report.gate_passed && !report.later_layers_run) {
    out += "single-node errors present; multi-node and OSPF checks skipped\n";
  }
  const std::size_t total = all.size();
  out += std::to_string(total) + (total == 1 ? " violation" : " violations");
  if (total > 0) {
    out += " (" + std::to_string(errors) + " errors, " +
           std::to_string(total - errors) + " warnings)";
  }
  return out + "\n";
}

std::string ReportToJson(const Report& report, const std::string& model_path) {
  nlohmann::ordered_json layers;
  layers["singleNode"] = ToJson(report.single_node);
  if (report.later_layers_run) {
    layers["multiNode"] = ToJson(report.multi_node);
    layers["ospf"] = ToJson(report.ospf);
  }
  std::vector<Violation> all = report.All();
  std::size_t errors = std::count_if(all.begin(), all.end(), [](const auto& v) {
    return v.severity == Severity::kError;
  });
  nlohmann::ordered_json doc;
  doc["model"] = model_path;
  doc["gatePassed"] = report.gate_passed;
  doc["layers"] = std::move(layers);
  doc["summary"] = {{"violations", all.size()},
                    {"errors", errors},
                    {"warnings", all.size() - errors}};
  return doc.dump(2) + "\n";
}

}  // namespace ncverify
