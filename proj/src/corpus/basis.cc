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

#include "qnlp/corpus/basis.h"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>
#include <utility>

#include "qnlp/common/errors.h"

namespace qnlp::corpus {
namespace {

// Positions of `text` across every occurrence of class cls, merged.
std::vector<std::size_t> merged_positions(
    const std::vector<TokenOccurrence>& occurrences, const std::string& text,
    Tag cls) {
  std::vector<std::size_t> out;
  for (const TokenOccurrence& o : occurrences) {
    if (o.text == text && matches_class(o.tag, cls)) {
      out.insert(out.end(), o.positions.begin(), o.positions.end());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += ", ";
    out += s;
  }
  return out;
}

}  // namespace

std::string_view reducer_name(Reducer r) {
  switch (r) {
    case Reducer::kMin:
      return "min";
    case Reducer::kMean:
      return "mean";
    case Reducer::kMedian:
      return "median";
  }
  return "min";
}

Reducer parse_reducer(std::string_view name) {
  if (name == "min") return Reducer::kMin;
  if (name == "mean") return Reducer::kMean;
  if (name == "median") return Reducer::kMedian;
  throw InvalidArgument("unknown distance reducer \"" + std::string(name) +
                        "\" (expected min, mean or median)");
}

double pairwise_token_distance(const TokenOccurrence& a,
                               const TokenOccurrence& b, Reducer reducer) {
  if (a.positions.empty() || b.positions.empty()) {
    throw InvalidArgument("token without positions: \"" +
                          (a.positions.empty() ? a.text : b.text) + "\"");
  }
  if (reducer == Reducer::kMin) {
    // Both lists are sorted; a merge walk finds the closest pair.
    std::size_t best = static_cast<std::size_t>(-1);
    std::size_t i = 0, j = 0;
    while (i < a.positions.size() && j < b.positions.size()) {
      const std::size_t pa = a.positions[i], pb = b.positions[j];
      best = std::min(best, pa > pb ? pa - pb : pb - pa);
      if (pa < pb) {
        ++i;
      } else {
        ++j;
      }
    }
    return static_cast<double>(best);
  }
  std::vector<double> d;
  d.reserve(a.positions.size() * b.positions.size());
  for (std::size_t pa : a.positions) {
    for (std::size_t pb : b.positions) {
      d.push_back(static_cast<double>(pa > pb ? pa - pb : pb - pa));
    }
  }
  if (reducer == Reducer::kMean) {
    double sum = 0.0;
    for (double x : d) sum += x;
    return sum / static_cast<double>(d.size());
  }
  std::sort(d.begin(), d.end());
  const std::size_t mid = d.size() / 2;
  return d.size() % 2 == 1 ? d[mid] : 0.5 * (d[mid - 1] + d[mid]);
}

BasisSelection select_basis(const std::vector<TokenOccurrence>& occurrences,
                            Tag cls, std::size_t n) {
  std::map<std::string, std::size_t> frequency;
  for (const TokenOccurrence& o : occurrences) {
    if (o.tag == Tag::kStopword || !matches_class(o.tag, cls)) continue;
    frequency[o.text] += o.frequency();
  }
  std::vector<std::pair<std::string, std::size_t>> ranked(frequency.begin(),
                                                          frequency.end());
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) {
                     return a.second > b.second;
                   });
  BasisSelection out;
  for (std::size_t i = 0; i < ranked.size() && i < n; ++i) {
    out.tokens.push_back(ranked[i].first);
  }
  out.short_of_candidates = out.tokens.size() < n;
  return out;
}

BasisSet::BasisSet(std::vector<std::string> tokens, CyclicCode code)
    : tokens_(std::move(tokens)), code_(std::move(code)) {
  if (tokens_.size() > code_.size()) {
    throw CapacityError(std::to_string(tokens_.size()) +
                        " basis tokens exceed the " +
                        std::to_string(code_.size()) + " codewords of width " +
                        std::to_string(code_.width()));
  }
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    if (!index_.emplace(tokens_[i], i).second) {
      throw InvalidArgument("basis token \"" + tokens_[i] + "\" repeated");
    }
  }
}

bool BasisSet::contains(const std::string& token) const {
  return index_.count(token) != 0;
}

const Pattern& BasisSet::codeword(const std::string& token) const {
  auto it = index_.find(token);
  if (it == index_.end()) {
    throw ResolutionError("\"" + token + "\" is not a basis token; known: " +
                          join(tokens_));
  }
  return code_[it->second];
}

std::optional<std::string> BasisSet::token_for(const Pattern& p) const {
  auto i = code_.index_of(p);
  if (!i || *i >= tokens_.size()) return std::nullopt;
  return tokens_[*i];
}

unsigned code_width_for(std::size_t k) {
  return std::max<unsigned>(1, static_cast<unsigned>((k + 1) / 2));
}

BasisSet assign_codes(const std::vector<std::string>& ordering,
                      const CyclicCode& code) {
  return BasisSet(ordering, code);
}

DistanceMatrix basis_distance_matrix(
    const std::vector<TokenOccurrence>& occurrences,
    const std::vector<std::string>& tokens, Tag cls, Reducer reducer) {
  std::vector<TokenOccurrence> merged;
  for (const std::string& t : tokens) {
    merged.push_back({t, cls, merged_positions(occurrences, t, cls)});
  }
  DistanceMatrix w(tokens.size(), std::vector<double>(tokens.size(), 0.0));
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    for (std::size_t j = i + 1; j < tokens.size(); ++j) {
      w[i][j] = w[j][i] = pairwise_token_distance(merged[i], merged[j], reducer);
    }
  }
  return w;
}

BasisSet build_basis(const std::vector<TokenOccurrence>& occurrences,
                     const std::vector<std::string>& selected, Tag cls,
                     Reducer reducer, unsigned width) {
  std::vector<std::string> ordering = selected;
  if (selected.size() >= kMinCycleSize) {
    const DistanceMatrix w =
        basis_distance_matrix(occurrences, selected, cls, reducer);
    ordering.clear();
    for (std::size_t i : min_hamiltonian_cycle(w, 0)) {
      ordering.push_back(selected[i]);
    }
  }
  const unsigned n = width == 0 ? code_width_for(selected.size()) : width;
  return assign_codes(ordering, generate_cyclic_code(n));
}

}  // namespace qnlp::corpus
