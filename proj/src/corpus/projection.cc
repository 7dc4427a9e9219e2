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

#include "qnlp/corpus/projection.h"

#include <algorithm>
#include <map>
#include <string>

#include "qnlp/common/errors.h"

namespace qnlp::corpus {

const std::set<std::string>& ProjectionMap::operator[](
    const std::string& token) const {
  static const std::set<std::string> kEmpty;
  auto it = entries_.find(token);
  return it == entries_.end() ? kEmpty : it->second;
}

void ProjectionMap::set(const std::string& token,
                        std::set<std::string> targets) {
  entries_[token] = std::move(targets);
}

ProjectionMap project_tokens(const std::vector<TokenOccurrence>& occurrences,
                             const BasisSet& basis, Tag cls, double cutoff,
                             Reducer reducer) {
  if (!(cutoff >= 1.0)) {
    throw InvalidArgument("projection cutoff must be at least 1");
  }
  // Merge the positions of each token of the class across noun variants.
  std::map<std::string, TokenOccurrence> merged;
  for (const TokenOccurrence& o : occurrences) {
    if (!matches_class(o.tag, cls)) continue;
    TokenOccurrence& m = merged[o.text];
    m.text = o.text;
    m.tag = cls;
    m.positions.insert(m.positions.end(), o.positions.begin(),
                       o.positions.end());
  }
  for (auto& [text, occ] : merged) {
    std::sort(occ.positions.begin(), occ.positions.end());
  }

  ProjectionMap out;
  for (const std::string& b : basis.tokens()) out.set(b, {b});
  for (const auto& [text, occ] : merged) {
    if (basis.contains(text)) continue;
    std::set<std::string> targets;
    for (const std::string& b : basis.tokens()) {
      auto it = merged.find(b);
      if (it == merged.end()) continue;
      if (pairwise_token_distance(occ, it->second, reducer) <= cutoff) {
        targets.insert(b);
      }
    }
    if (!targets.empty()) out.set(text, std::move(targets));
  }
  return out;
}

}  // namespace qnlp::corpus
