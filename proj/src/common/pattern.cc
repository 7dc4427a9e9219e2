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
#include "qnlp/common/pattern.h"

#include "qnlp/common/errors.h"

namespace qnlp {

Pattern::Pattern(std::uint64_t value, unsigned width)
    : value_(value), width_(width) {
  if (width > kMaxPatternWidth) {
    throw CapacityError("pattern width " + std::to_string(width) +
                        " exceeds " + std::to_string(kMaxPatternWidth));
  }
  if (width < 64 && (value >> width) != 0) {
    throw InvalidArgument("value " + std::to_string(value) +
                          " does not fit in " + std::to_string(width) +
                          " bits");
  }
}

Pattern Pattern::parse(std::string_view bits) {
  if (bits.empty()) throw ParseError("empty bit-string");
  if (bits.size() > kMaxPatternWidth) {
    throw ParseError("bit-string '" + std::string(bits) + "' is too wide");
  }
  std::uint64_t value = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw ParseError("'" + std::string(bits) + "' is not a bit-string");
    }
    value = (value << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return Pattern(value, static_cast<unsigned>(bits.size()));
}

std::string Pattern::to_string() const {
  std::string out(width_, '0');
  for (unsigned k = 0; k < width_; ++k) {
    if (bit(k)) out[width_ - 1 - k] = '1';
  }
  return out;
}

Pattern Pattern::concat(const Pattern& high, const Pattern& low) {
  return Pattern((high.value() << low.width()) | low.value(),
                 high.width() + low.width());
}

int hamming_distance(const Pattern& a, const Pattern& b) {
  if (a.width() != b.width()) {
    throw InvalidArgument("hamming distance between widths " +
                          std::to_string(a.width()) + " and " +
                          std::to_string(b.width()));
  }
  return std::popcount(a.value() ^ b.value());
}

}  // namespace qnlp
