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
#include "qnlp/corpus/basis.h"
#include "qnlp/corpus/projection.h"
#include "qnlp/corpus/tagger.h"

namespace qnlp::corpus {

struct PreprocessParams {
  std::size_t n_nouns = 8;
  std::size_t n_verbs = 4;
  double w_nouns = 5;
  double w_verbs = 5;
  double w_vn = 4;
  Reducer reducer = Reducer::kMin;

  // Throws InvalidArgument unless the counts are even and >= 2 and every
  // cutoff is >= 1.
  void validate() const;
  friend bool operator==(const PreprocessParams&,
                         const PreprocessParams&) = default;
};

// The three meaning spaces of a noun-verb-noun sentence and the projections
// of composite tokens onto each.
struct MeaningSpace {
  BasisSet subject;
  BasisSet verb;
  BasisSet object;
  ProjectionMap subject_projection;
  ProjectionMap verb_projection;
  ProjectionMap object_projection;

  // object ∥ verb ∥ subject, subject in the least-significant bits.
  unsigned width() const {
    return subject.width() + verb.width() + object.width();
  }
  Pattern compose(const Pattern& subject_code, const Pattern& verb_code,
                  const Pattern& object_code) const;
  // Throws ResolutionError when a token is not in its basis.
  Pattern compose(const std::string& subject_token,
                  const std::string& verb_token,
                  const std::string& object_token) const;

  struct Decoded {
    std::string subject;
    std::string verb;
    std::string object;
  };
  // Splits a composed pattern back into basis tokens; nullopt when a field
  // holds a codeword with no token.
  std::optional<Decoded> decode(const Pattern& p) const;
  std::string label(const Pattern& p) const;
};

struct SentencePattern {
  std::string subject_token;
  std::string verb_token;
  std::string object_token;
  std::size_t verb_position = 0;
  std::vector<Pattern> subject;
  std::vector<Pattern> verb;
  std::vector<Pattern> object;
  std::vector<Pattern> composed;
};

struct CorpusModel {
  PreprocessParams params;
  std::vector<TokenOccurrence> occurrences;
  MeaningSpace space;
  std::vector<SentencePattern> sentences;
  // Distinct composed patterns in order of first appearance.
  std::vector<Pattern> patterns;
  bool noun_basis_short = false;
  bool verb_basis_short = false;
};

// Emits a sentence for every verb occurrence with a subject noun within
// w_vn before it and an object noun within w_vn after it; tokens whose
// projection is empty are skipped. Subject and object nouns are therefore
// within 2*w_vn of each other.
std::vector<SentencePattern> form_sentences(const CorpusModel& model,
                                            const PreprocessParams& params);

// Composed patterns of all sentences, deduplicated in first-appearance order.
std::vector<Pattern> unique_patterns(
    const std::vector<SentencePattern>& sentences);

// Partial meaning space supplied by hand. Each present basis replaces the
// automatic selection; each present projection entry overrides the
// computed one.
struct MeaningSpaceFixture {
  struct Basis {
    std::vector<std::string> tokens;
    unsigned width = 0;  // 0 selects code_width_for(tokens.size()).
  };
  std::optional<Basis> subject;
  std::optional<Basis> verb;
  std::optional<Basis> object;
  ProjectionMap::Entries subject_projection;
  ProjectionMap::Entries verb_projection;
  ProjectionMap::Entries object_projection;
  // Suggested parameter values by environment-variable name; callers decide
  // their precedence against other sources.
  std::map<std::string, double> params;
};

// Meaning space made only of the fixture's bases and projections. Throws
// InvalidArgument unless all three bases are present.
MeaningSpace space_from_fixture(const MeaningSpaceFixture& fixture);

// Runs basis selection, code assignment, projection and sentence formation.
CorpusModel build_model(std::vector<TokenOccurrence> occurrences,
                        const PreprocessParams& params,
                        const MeaningSpaceFixture* fixture = nullptr);

}  // namespace qnlp::corpus
