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

#ifndef NCVERIFY_IPV4_H_
#define NCVERIFY_IPV4_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace ncverify {

class Ipv4 {
 public:
  constexpr Ipv4() = default;
  constexpr explicit Ipv4(std::uint32_t bits) : bits_(bits) {}

  // Strict dotted-quad; nullopt on anything else.
  static std::optional<Ipv4> Parse(std::string_view text);

  constexpr std::uint32_t bits() const { return bits_; }
  std::string ToString() const;

  friend constexpr auto operator<=>(Ipv4, Ipv4) = default;

 private:
  std::uint32_t bits_ = 0;
};

// Number of leading one bits when `mask` is contiguous (255.255.255.0 -> 24).
std::optional<int> MaskPrefixLength(Ipv4 mask);
Ipv4 MaskFromPrefixLength(int length);

// An IPv4 network: address with host bits cleared plus its prefix length.
struct Prefix {
  Ipv4 network;
  int length = 0;

  static Prefix Of(Ipv4 address, int length);
  bool Contains(Ipv4 address) const;
  std::string ToString() const;

  friend constexpr auto operator<=>(const Prefix&, const Prefix&) = default;
};

// Prefixes either nest or are disjoint, so overlap is containment.
bool Overlaps(const Prefix& a, const Prefix& b);

// OSPF network-statement matching: a set wildcard bit is "don't care".
bool WildcardMatches(Ipv4 statement, Ipv4 wildcard, Ipv4 address);

}  // namespace ncverify

#endif  // NCVERIFY_IPV4_H_
