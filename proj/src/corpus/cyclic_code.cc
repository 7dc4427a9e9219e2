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

#include "qnlp/corpus/cyclic_code.h"

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>

#include "qnlp/common/errors.h"

namespace qnlp::corpus {

CyclicCode::CyclicCode(unsigned width, std::vector<Pattern> codewords)
    : width_(width), codewords_(std::move(codewords)) {
  if (codewords_.size() != 2 * static_cast<std::size_t>(width_)) {
    throw InvalidArgument("a width-" + std::to_string(width_) +
                          " cyclic code needs " + std::to_string(2 * width_) +
                          " codewords, got " +
                          std::to_string(codewords_.size()));
  }
  for (const Pattern& p : codewords_) {
    if (p.width() != width_) {
      throw InvalidArgument("codeword " + p.to_string() +
                            " does not have width " + std::to_string(width_));
    }
  }
}

std::optional<std::size_t> CyclicCode::index_of(const Pattern& p) const {
  auto it = std::find(codewords_.begin(), codewords_.end(), p);
  if (it == codewords_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - codewords_.begin());
}

std::size_t CyclicCode::cyclic_distance(std::size_t i, std::size_t j) const {
  const std::size_t d = i > j ? i - j : j - i;
  return std::min(d, codewords_.size() - d);
}

CyclicCode generate_cyclic_code(unsigned n) {
  if (n == 0) throw InvalidArgument("cyclic code width must be at least 1");
  if (n > kMaxPatternWidth) {
    throw CapacityError("cyclic code width " + std::to_string(n) +
                        " exceeds " + std::to_string(kMaxPatternWidth));
  }
  std::vector<std::uint64_t> p(2 * static_cast<std::size_t>(n));
  p[0] = 0;
  for (unsigned i = 1; i <= n; ++i) p[i] = 2 * p[i - 1] + 1;
  for (unsigned i = n + 1; i < 2 * n; ++i) p[i] = p[n] - p[i - n];

  std::vector<Pattern> words;
  words.reserve(p.size());
  for (std::uint64_t v : p) words.emplace_back(v, n);
  return CyclicCode(n, std::move(words));
}

}  // namespace qnlp::corpus
