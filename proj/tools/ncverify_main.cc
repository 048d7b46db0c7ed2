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

// ncverify: verify network configuration models, render device-style show
// output, inject catalogued faults and export the physical topology.
//
//   ncverify verify model.json [--json] [--ignore-gate] [--disable RULE]...
//   ncverify show model.json show ip ospf interface campus1 Vlan20
//   ncverify inject model.json --mutation duplicate-router-id -o out.json
//   ncverify inject model.json --all -o corpus/
//   ncverify topology model.json [-o edges.json]

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ncverify/errors.h"
#include "ncverify/fault_injector.h"
#include "ncverify/model.h"
#include "ncverify/show_renderer.h"
#include "ncverify/verifier.h"

namespace {

constexpr int kExitClean = 0;
constexpr int kExitViolations = 1;
constexpr int kExitError = 2;

void WriteFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ncverify::FileError("cannot write " + path.string());
  out << text;
}

void Emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    WriteFile(out_path, text);
  }
}

ncverify::RuleFilter FilterOf(const std::vector<std::string>& disabled) {
  return ncverify::RuleFilter(
      std::set<std::string, std::less<>>(disabled.begin(), disabled.end()));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Static verification of network configuration models"};
  app.require_subcommand(1);

  std::string model_path;
  bool json = false;
  bool ignore_gate = false;
  std::vector<std::string> disabled;
  std::vector<std::string> words;
  std::string mutation_id;
  bool all = false;
  std::string out_path;

  auto* verify = app.add_subcommand("verify", "Check a model through every layer");
  verify->add_option("model", model_path, "Model file (JSON)")->required();
  verify->add_flag("--json", json, "Machine-readable report");
  verify->add_flag("--ignore-gate", ignore_gate,
                   "Run multi-node and OSPF checks despite single-node errors");
  verify->add_option("--disable", disabled,
                     "Rule id or item to switch off (repeatable), e.g. OSPF.11");
  verify->footer(
      "Exit status: 0 no violations, 1 violations found, 2 unreadable or "
      "malformed model.");

  auto* show = app.add_subcommand("show", "Render device-style show output");
  show->add_option("model", model_path, "Model file (JSON)")->required();
  show->add_option("command", words, "Show command words")->required();
  {
    std::string footer = "Supported commands:";
    for (std::string_view form : ncverify::CommandForms()) {
      footer += "\n  " + std::string(form);
    }
    show->footer(footer);
  }

  auto* inject = app.add_subcommand("inject", "Inject catalogued configuration errors");
  inject->add_option("model", model_path, "Clean model file (JSON)")->required();
  auto* one = inject->add_option("--mutation", mutation_id, "Mutation id");
  auto* every = inject->add_flag(
      "--all", all, "Every mutation: write the corpus and run the experiment");
  one->excludes(every);
  inject->add_option("-o,--output", out_path,
                     "Output file (--mutation) or directory (--all)");
  inject->add_option("--disable", disabled,
                     "Rule id or item to switch off during the experiment");
  inject->add_flag("--json", json, "Machine-readable experiment summary");
  inject->footer([] {
    std::string footer = "Mutations:";
    for (const auto& m : ncverify::DefaultMutationCatalog()) {
      footer += "\n  " + m.id;
    }
    return footer;
  }());

  auto* topology = app.add_subcommand("topology", "Export physical connections");
  topology->add_option("model", model_path, "Model file (JSON)")->required();
  topology->add_option("-o,--output", out_path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitClean : kExitError;
  }

  try {
    ncverify::ModelGraph graph = ncverify::LoadModel(model_path);

    if (verify->parsed()) {
      ncverify::VerifyOptions options;
      options.filter = FilterOf(disabled);
      options.ignore_gate = ignore_gate;
      ncverify::Report report = ncverify::Verify(graph, options);
      std::cout << (json ? ncverify::ReportToJson(report, model_path)
                         : ncverify::FormatReport(graph, report));
      return report.clean() ? kExitClean : kExitViolations;
    }

    if (show->parsed()) {
      std::string command;
      for (const std::string& w : words) command += (command.empty() ? "" : " ") + w;
      if (!words.empty() && words.front() != "show") command = "show " + command;
      std::cout << ncverify::RenderShow(graph, command);
      return kExitClean;
    }

    if (inject->parsed()) {
      const auto& catalog = ncverify::DefaultMutationCatalog();
      if (!all) {
        if (mutation_id.empty()) {
          std::cerr << "inject: give --mutation <id> or --all\n";
          return kExitError;
        }
        const auto& mutation = ncverify::FindMutation(catalog, mutation_id);
        Emit(out_path,
             ncverify::SerializeModel(ncverify::Inject(graph, mutation)));
        return kExitClean;
      }
      ncverify::VerifyOptions options;
      options.filter = FilterOf(disabled);
      ncverify::ExperimentReport report =
          ncverify::RunExperiment(graph, catalog, options);
      if (!out_path.empty()) {
        std::filesystem::create_directories(out_path);
        for (const auto& mutation : catalog) {
          WriteFile(std::filesystem::path(out_path) / (mutation.id + ".json"),
                    ncverify::SerializeModel(ncverify::Inject(graph, mutation)));
        }
        WriteFile(std::filesystem::path(out_path) / "experiment.json",
                  report.ToJson());
      }
      std::cout << (json ? report.ToJson() : report.ToText());
      return kExitClean;
    }

    if (topology->parsed()) {
      Emit(out_path,
           ncverify::TopologyToJson(ncverify::ExportTopology(graph)));
      return kExitClean;
    }
  } catch (const ncverify::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
