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

#include <regex>

namespace ncverify {
namespace {

const std::regex& PlaceholderPattern() {
  static const std::regex pattern(R"(<([A-Za-z][A-Za-z0-9_]*)(?:\|(-?)(\d+))?>)");
  return pattern;
}

std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto nl = text.find('\n');
    lines.push_back(text.substr(0, nl));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

std::string_view Directive(std::string_view line) {
  auto start = line.find_first_not_of(' ');
  if (start == std::string_view::npos || line[start] != '@') return {};
  line.remove_prefix(start);
  while (!line.empty() && (line.back() == ' ' || line.back() == '\r')) {
    line.remove_suffix(1);
  }
  return line;
}

class Renderer {
 public:
  explicit Renderer(std::vector<std::string_view> lines)
      : lines_(std::move(lines)) {}

  std::string Render(const TemplateScope& root) {
    std::vector<const TemplateScope*> chain = {&root};
    std::string out;
    Block(0, lines_.size(), chain, out);
    return out;
  }

 private:
  // Index of the @end matching the @each at `open`.
  std::size_t MatchingEnd(std::size_t open, std::size_t end) const {
    int depth = 0;
    for (std::size_t i = open; i < end; ++i) {
      std::string_view d = Directive(lines_[i]);
      if (d.starts_with("@each ")) ++depth;
      if (d == "@end" && --depth == 0) return i;
    }
    throw TemplateError("@each on template line " + std::to_string(open + 1) +
                        " has no matching @end");
  }

  const std::string* Lookup(const std::vector<const TemplateScope*>& chain,
                            std::string_view key) const {
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      auto found = (*it)->values.find(key);
      if (found != (*it)->values.end()) return &found->second;
    }
    return nullptr;
  }

  const std::vector<TemplateScope>* List(
      const std::vector<const TemplateScope*>& chain,
      std::string_view key) const {
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      auto found = (*it)->lists.find(key);
      if (found != (*it)->lists.end()) return &found->second;
    }
    return nullptr;
  }

  void Block(std::size_t begin, std::size_t end,
             std::vector<const TemplateScope*>& chain, std::string& out) {
    for (std::size_t i = begin; i < end; ++i) {
      std::string_view d = Directive(lines_[i]);
      if (d.starts_with("@each ")) {
        std::size_t close = MatchingEnd(i, end);
        std::string_view name = d.substr(6);
        if (const auto* records = List(chain, name)) {
          for (const TemplateScope& record : *records) {
            chain.push_back(&record);
            Block(i + 1, close, chain, out);
            chain.pop_back();
          }
        }
        i = close;
        continue;
      }
      if (d == "@end") {
        throw TemplateError("unmatched @end on template line " +
                            std::to_string(i + 1));
      }
      if (d.starts_with("@#")) continue;
      Line(lines_[i], chain, out);
    }
  }

  void Line(std::string_view line, const std::vector<const TemplateScope*>& chain,
            std::string& out) const {
    std::string text;
    auto begin = std::regex_iterator<std::string_view::const_iterator>(
        line.begin(), line.end(), PlaceholderPattern());
    auto last = line.begin();
    for (auto it = begin; it != decltype(begin)(); ++it) {
      const auto& m = *it;
      text.append(last, m[0].first);
      last = m[0].second;
      const std::string* value = Lookup(chain, m[1].str());
      if (value == nullptr) return;  // optional line without a value
      std::string cell = *value;
      if (m[3].matched) {
        std::size_t width = std::stoul(m[3].str());
        if (cell.size() < width) {
          std::string pad(width - cell.size(), ' ');
          cell = m[2].length() > 0 ? pad + cell : cell + pad;
        }
      }
      text += cell;
    }
    text.append(last, line.end());
    while (!text.empty() && (text.back() == ' ' || text.back() == '\r' ||
                             text.back() == '\t')) {
      text.pop_back();
    }
    out += text;
    out += '\n';
  }

  std::vector<std::string_view> lines_;
};

}  // namespace

std::string RenderTemplate(std::string_view text, const TemplateScope& scope) {
  return Renderer(SplitLines(text)).Render(scope);
}

}  // namespace ncverify
