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

#include "ncverify/ipv4.h"

#include <charconv>

namespace ncverify {

std::optional<Ipv4> Ipv4::Parse(std::string_view text) {
  std::uint32_t bits = 0;
  for (int octet = 0; octet < 4; ++octet) {
    if (octet > 0) {
      if (text.empty() || text.front() != '.') return std::nullopt;
      text.remove_prefix(1);
    }
    std::size_t digits = 0;
    while (digits < text.size() && text[digits] >= '0' && text[digits] <= '9') {
      ++digits;
    }
    if (digits == 0 || digits > 3) return std::nullopt;
    unsigned value = 0;
    std::from_chars(text.data(), text.data() + digits, value);
    if (value > 255) return std::nullopt;
    bits = (bits << 8) | value;
    text.remove_prefix(digits);
  }
  if (!text.empty()) return std::nullopt;
  return Ipv4(bits);
}

std::string Ipv4::ToString() const {
  return std::to_string(bits_ >> 24) + "." +
         std::to_string((bits_ >> 16) & 0xff) + "." +
         std::to_string((bits_ >> 8) & 0xff) + "." +
         std::to_string(bits_ & 0xff);
}

std::optional<int> MaskPrefixLength(Ipv4 mask) {
  const std::uint32_t bits = mask.bits();
  const std::uint32_t inverted = ~bits;
  // Contiguous iff the inverted mask is of the form 0...01...1.
  if ((inverted & (inverted + 1)) != 0) return std::nullopt;
  int length = 0;
  for (std::uint32_t b = bits; b & 0x80000000u; b <<= 1) ++length;
  return length;
}

Ipv4 MaskFromPrefixLength(int length) {
  if (length <= 0) return Ipv4(0);
  if (length >= 32) return Ipv4(0xffffffffu);
  return Ipv4(~((1u << (32 - length)) - 1));
}

Prefix Prefix::Of(Ipv4 address, int length) {
  return {Ipv4(address.bits() & MaskFromPrefixLength(length).bits()), length};
}

bool Prefix::Contains(Ipv4 address) const {
  return (address.bits() & MaskFromPrefixLength(length).bits()) ==
         network.bits();
}

std::string Prefix::ToString() const {
  return network.ToString() + "/" + std::to_string(length);
}

bool Overlaps(const Prefix& a, const Prefix& b) {
  return a.length <= b.length ? a.Contains(b.network) : b.Contains(a.network);
}

bool WildcardMatches(Ipv4 statement, Ipv4 wildcard, Ipv4 address) {
  const std::uint32_t care = ~wildcard.bits();
  return (address.bits() & care) == (statement.bits() & care);
}

}  // namespace ncverify
