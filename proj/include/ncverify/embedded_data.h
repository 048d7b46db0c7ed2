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

#ifndef NCVERIFY_EMBEDDED_DATA_H_
#define NCVERIFY_EMBEDDED_DATA_H_

#include <string_view>

namespace ncverify {

// Returns the contents of a data file compiled into the library, keyed by its
// path relative to the repository root (e.g. "data/rule_catalog.json").
// Throws std::out_of_range for unknown paths.
std::string_view EmbeddedData(std::string_view path);

}  // namespace ncverify

#endif  // NCVERIFY_EMBEDDED_DATA_H_
