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

#include <cstddef>
#include <optional>
#include <vector>

#include "qnlp/common/pattern.h"

namespace qnlp::corpus {

// 2n codewords of width n in which the Hamming distance between codewords i
// and j equals their cyclic index distance min(|i-j|, 2n-|i-j|).
class CyclicCode {
 public:
  CyclicCode() = default;
  // Throws InvalidArgument unless codewords has 2*width entries of that width.
  CyclicCode(unsigned width, std::vector<Pattern> codewords);

  unsigned width() const { return width_; }
  std::size_t size() const { return codewords_.size(); }
  const std::vector<Pattern>& codewords() const { return codewords_; }
  const Pattern& operator[](std::size_t i) const { return codewords_[i]; }
  std::optional<std::size_t> index_of(const Pattern& p) const;

  // min(|i-j|, size-|i-j|).
  std::size_t cyclic_distance(std::size_t i, std::size_t j) const;

 private:
  unsigned width_ = 0;
  std::vector<Pattern> codewords_;
};

// p(1) = 0, p(i+1) = 2p(i) + 1 up to p(n+1) = 2^n - 1, then
// p(i) = p(n+1) - p(i-n) for n+1 < i <= 2n. Throws InvalidArgument for
// n = 0 and CapacityError above kMaxPatternWidth.
CyclicCode generate_cyclic_code(unsigned n);

}  // namespace qnlp::corpus
