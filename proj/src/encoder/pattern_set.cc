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
#include "qnlp/encoder/pattern_set.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "qnlp/common/errors.h"

namespace qnlp {

PatternSet::PatternSet(std::vector<Pattern> patterns,
                       std::vector<std::string> labels)
    : patterns_(std::move(patterns)), labels_(std::move(labels)) {
  if (labels_.empty()) labels_.resize(patterns_.size());
  if (labels_.size() != patterns_.size()) {
    throw InvalidArgument("label count does not match pattern count");
  }
  if (patterns_.empty()) return;
  width_ = patterns_.front().width();
  if (width_ == 0) throw InvalidArgument("patterns must be at least 1 bit");
  for (const Pattern& p : patterns_) {
    if (p.width() != width_) {
      throw InvalidArgument("pattern " + p.to_string() + " has width " +
                            std::to_string(p.width()) + ", expected " +
                            std::to_string(width_));
    }
  }
  std::vector<Pattern> sorted = patterns_;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) {
    throw InvalidArgument("duplicate pattern " + dup->to_string());
  }
  if (width_ < 63 && patterns_.size() > (std::size_t{1} << width_)) {
    throw CapacityError(std::to_string(patterns_.size()) +
                        " patterns do not fit in " + std::to_string(width_) +
                        " bits");
  }
}

bool PatternSet::contains(const Pattern& p) const {
  return std::find(patterns_.begin(), patterns_.end(), p) != patterns_.end();
}

PatternSet PatternSet::read(std::istream& in) {
  std::vector<Pattern> patterns;
  std::vector<std::string> labels;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string bits;
    if (!(fields >> bits) || bits.front() == '#') continue;
    try {
      patterns.push_back(Pattern::parse(bits));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
    std::string label;
    fields >> label;
    labels.push_back(label);
  }
  try {
    return PatternSet(std::move(patterns), std::move(labels));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

PatternSet PatternSet::read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open pattern file '" + path + "'");
  return read(in);
}

void PatternSet::write(std::ostream& out) const {
  for (std::size_t i = 0; i < patterns_.size(); ++i) {
    out << patterns_[i].to_string();
    if (!labels_[i].empty()) out << '\t' << labels_[i];
    out << '\n';
  }
}

}  // namespace qnlp
