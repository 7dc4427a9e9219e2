// Copyright 2026 The qnlp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace qnlp {

inline constexpr unsigned kMaxPatternWidth = 63;

// A fixed-width bit-string. Printed most-significant bit first; bit k of
// value() lives on qubit k of the register holding it (little-endian).
class Pattern {
 public:
  Pattern() = default;
  Pattern(std::uint64_t value, unsigned width);

  // Parses a string of '0'/'1' characters. Throws ParseError otherwise.
  static Pattern parse(std::string_view bits);

  std::uint64_t value() const { return value_; }
  unsigned width() const { return width_; }
  bool bit(unsigned k) const { return (value_ >> k) & 1U; }
  int popcount() const { return std::popcount(value_); }

  std::string to_string() const;

  // Concatenates high ∥ low: high occupies the most-significant bits.
  static Pattern concat(const Pattern& high, const Pattern& low);

  friend bool operator==(const Pattern&, const Pattern&) = default;
  friend auto operator<=>(const Pattern& a, const Pattern& b) {
    if (auto c = a.width_ <=> b.width_; c != 0) return c;
    return a.value_ <=> b.value_;
  }

 private:
  std::uint64_t value_ = 0;
  unsigned width_ = 0;
};

// Hamming distance; both patterns must share a width.
int hamming_distance(const Pattern& a, const Pattern& b);

}  // namespace qnlp
