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

#ifndef NCVERIFY_FAULT_INJECTOR_H_
#define NCVERIFY_FAULT_INJECTOR_H_

#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ncverify/errors.h"
#include "ncverify/model.h"
#include "ncverify/verifier.h"

namespace ncverify {

class TargetMissing : public Error {
 public:
  using Error::Error;
};

class FixtureNotClean : public Error {
 public:
  using Error::Error;
};

// One declarative edit of a model.
struct PatchOp {
  enum class Kind { kSet, kUnset, kDeleteNode, kDeleteEdge, kAddNode, kAddEdge };

  Kind kind = Kind::kSet;
  std::string node;   // target node; the new node for kAddNode
  std::string item;   // kSet, kUnset
  std::string value;  // kSet
  std::string peer;   // other endpoint for kDeleteEdge, kAddEdge
  NodeKind node_kind = NodeKind::kConfig;  // kAddNode
  FieldMap fields;                         // kAddNode
};

struct Mutation {
  std::string id;
  std::string name;
  std::string method;
  std::vector<std::string> detection_items;  // e.g. "OSPF.3"
  std::vector<std::pair<std::string, std::string>> culprit_sites;
  std::vector<PatchOp> patch;
};

// Throws SchemaError on a malformed catalog.
std::vector<Mutation> ParseMutationCatalog(std::string_view text);
// The catalog compiled into the library (data/mutation_catalog.json).
const std::vector<Mutation>& DefaultMutationCatalog();
// Throws TargetMissing for an unknown id.
const Mutation& FindMutation(const std::vector<Mutation>& catalog,
                             std::string_view id);

// Applies the patch to a copy of `graph`. Throws TargetMissing when a node,
// item or edge the patch refers to does not exist, and SchemaError when the
// result violates the metamodel.
ModelGraph Inject(const ModelGraph& graph, const Mutation& mutation);

// A patch that undoes `mutation` when applied to Inject(graph, mutation).
Mutation Inverse(const ModelGraph& graph, const Mutation& mutation);

enum class Outcome {
  kIdentified,    // a violation fired and a culprit lies on a culprit site
  kDetectedOnly,  // violations fired but none names a culprit site
  kUndetected,
};
std::string_view OutcomeSymbol(Outcome outcome);  // ○ △ ×

struct MutationResult {
  std::string id;
  std::string name;
  std::set<std::string> fired_items;  // verification items, e.g. "OSPF.3"
  std::vector<std::string> missing_items;  // expected items that did not fire
  Outcome outcome = Outcome::kUndetected;
  Report report;
};

struct ExperimentReport {
  std::vector<MutationResult> results;

  std::size_t detected() const;
  std::size_t identified() const;
  std::string ToText() const;
  std::string ToJson() const;
};

// Verifies every mutation of `catalog` against its own copy of `graph`.
// Throws FixtureNotClean when `graph` itself has violations under `options`.
ExperimentReport RunExperiment(const ModelGraph& graph,
                               const std::vector<Mutation>& catalog,
                               const VerifyOptions& options = {});

}  // namespace ncverify

#endif  // NCVERIFY_FAULT_INJECTOR_H_
