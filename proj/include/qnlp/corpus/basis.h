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
#include <optional>
#include <string>
#include <vector>

#include "qnlp/common/pattern.h"
#include "qnlp/corpus/cyclic_code.h"
#include "qnlp/corpus/hamiltonian_cycle.h"
#include "qnlp/corpus/tagger.h"

namespace qnlp::corpus {

enum class Reducer { kMin, kMean, kMedian };

std::string_view reducer_name(Reducer r);
// Throws InvalidArgument on an unknown name.
Reducer parse_reducer(std::string_view name);

// Reduces |pa - pb| over every pair of positions. Throws InvalidArgument
// when either token has no position.
double pairwise_token_distance(const TokenOccurrence& a,
                               const TokenOccurrence& b,
                               Reducer reducer = Reducer::kMin);

struct BasisSelection {
  std::vector<std::string> tokens;
  // Fewer than the requested number of candidates were available.
  bool short_of_candidates = false;
};

// The n most frequent tokens of class `cls`, ties broken by ascending text.
// Stopwords never qualify. Tokens sharing text across noun variants are
// merged before ranking.
BasisSelection select_basis(const std::vector<TokenOccurrence>& occurrences,
                            Tag cls, std::size_t n);

// Tokens in cycle order, each mapped onto the codeword of the same index.
class BasisSet {
 public:
  BasisSet() = default;
  BasisSet(std::vector<std::string> tokens, CyclicCode code);

  const std::vector<std::string>& tokens() const { return tokens_; }
  const CyclicCode& code() const { return code_; }
  unsigned width() const { return code_.width(); }
  std::size_t size() const { return tokens_.size(); }
  bool contains(const std::string& token) const;

  // Throws ResolutionError listing the basis when the token is absent.
  const Pattern& codeword(const std::string& token) const;
  // The token assigned to p, if any.
  std::optional<std::string> token_for(const Pattern& p) const;

 private:
  std::vector<std::string> tokens_;
  CyclicCode code_;
  std::map<std::string, std::size_t> index_;
};

// Code width needed for k tokens: ceil(k/2), at least 1.
unsigned code_width_for(std::size_t k);

// token[i] -> code[i]. Throws CapacityError when the ordering is longer
// than the code and InvalidArgument on repeated tokens.
BasisSet assign_codes(const std::vector<std::string>& ordering,
                      const CyclicCode& code);

// Matrix of reduced pairwise distances between the named tokens of class cls.
DistanceMatrix basis_distance_matrix(
    const std::vector<TokenOccurrence>& occurrences,
    const std::vector<std::string>& tokens, Tag cls, Reducer reducer);

// Orders the selected tokens along a minimum Hamiltonian cycle through their
// pairwise distances (starting at the most frequent) and assigns codes of
// width `width`, or code_width_for(k) when width is 0.
BasisSet build_basis(const std::vector<TokenOccurrence>& occurrences,
                     const std::vector<std::string>& selected, Tag cls,
                     Reducer reducer, unsigned width = 0);

}  // namespace qnlp::corpus
