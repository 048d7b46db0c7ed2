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

#ifndef NCVERIFY_TEMPLATE_H_
#define NCVERIFY_TEMPLATE_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ncverify/errors.h"

namespace ncverify {

class TemplateError : public Error {
 public:
  using Error::Error;
};

// Values visible to a template. Lookups inside an @each block see the
// current record first, then the enclosing scopes.
struct TemplateScope {
  std::map<std::string, std::string, std::less<>> values;
  std::map<std::string, std::vector<TemplateScope>, std::less<>> lists;
};

// Line-oriented output templates:
//   <Key>      replaced by the value of Key
//   <Key|12>   ... left-aligned and padded to 12 columns
//   <Key|-5>   ... right-aligned in 5 columns
//   @each xs   repeats the lines up to the matching @end once per record
//   @end
//   @# text    comment
// A line naming a key with no value is omitted, so optional settings simply
// disappear. Trailing whitespace is removed from every line. Throws
// TemplateError on unbalanced @each/@end.
std::string RenderTemplate(std::string_view text, const TemplateScope& scope);

}  // namespace ncverify

#endif  // NCVERIFY_TEMPLATE_H_
