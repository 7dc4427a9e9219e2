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
#include <map>
#include <set>
#include <string>
#include <vector>

#include "qnlp/corpus/basis.h"
#include "qnlp/corpus/tagger.h"

namespace qnlp::corpus {

// Composite token -> set of basis tokens. Absent tokens map to the empty set.
class ProjectionMap {
 public:
  using Entries = std::map<std::string, std::set<std::string>>;

  ProjectionMap() = default;
  explicit ProjectionMap(Entries entries) : entries_(std::move(entries)) {}

  const std::set<std::string>& operator[](const std::string& token) const;
  const Entries& entries() const { return entries_; }
  void set(const std::string& token, std::set<std::string> targets);
  std::size_t size() const { return entries_.size(); }

  friend bool operator==(const ProjectionMap&, const ProjectionMap&) = default;

 private:
  Entries entries_;
};

// Maps every token of class `cls` to the basis tokens within `cutoff` under
// the reduced position distance. Basis tokens map to themselves. Throws
// InvalidArgument when cutoff < 1.
ProjectionMap project_tokens(const std::vector<TokenOccurrence>& occurrences,
                             const BasisSet& basis, Tag cls, double cutoff,
                             Reducer reducer = Reducer::kMin);

}  // namespace qnlp::corpus
