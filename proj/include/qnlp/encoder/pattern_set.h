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
#include <iosfwd>
#include <string>
#include <vector>

#include "qnlp/common/pattern.h"

namespace qnlp {

// N distinct patterns of a common width, each with an optional label.
class PatternSet {
 public:
  PatternSet() = default;

  // Throws InvalidArgument on mixed widths or duplicates, CapacityError when
  // N exceeds 2^width. labels is either empty or parallel to patterns.
  explicit PatternSet(std::vector<Pattern> patterns,
                      std::vector<std::string> labels = {});

  std::size_t size() const { return patterns_.size(); }
  bool empty() const { return patterns_.empty(); }
  unsigned width() const { return width_; }
  const std::vector<Pattern>& patterns() const { return patterns_; }
  const Pattern& operator[](std::size_t i) const { return patterns_[i]; }
  // Empty when the pattern carries no label.
  const std::string& label(std::size_t i) const { return labels_[i]; }
  bool contains(const Pattern& p) const;

  // One pattern per line: "<bits>" or "<bits><whitespace><label>". Blank
  // lines and lines starting with '#' are skipped.
  static PatternSet read(std::istream& in);
  static PatternSet read_file(const std::string& path);
  void write(std::ostream& out) const;

 private:
  std::vector<Pattern> patterns_;
  std::vector<std::string> labels_;
  unsigned width_ = 0;
};

}  // namespace qnlp
