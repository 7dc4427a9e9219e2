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

#include "qnlp/corpus/corpus_model.h"

#include <string>
#include <utility>

#include "qnlp/common/errors.h"

namespace qnlp::corpus {
namespace {

Pattern slice(const Pattern& p, unsigned offset, unsigned width) {
  const std::uint64_t mask = (std::uint64_t{1} << width) - 1;
  return Pattern((p.value() >> offset) & mask, width);
}

BasisSet fixture_basis(const MeaningSpaceFixture::Basis& b) {
  const unsigned width =
      b.width == 0 ? code_width_for(b.tokens.size()) : b.width;
  return assign_codes(b.tokens, generate_cyclic_code(width));
}

ProjectionMap overlay(ProjectionMap base,
                      const ProjectionMap::Entries& overrides,
                      const BasisSet& basis, const char* space) {
  for (const auto& [token, targets] : overrides) {
    for (const std::string& t : targets) {
      if (!basis.contains(t)) {
        throw ResolutionError("projection of \"" + token + "\" names \"" + t +
                              "\", which is not in the " + space + " basis");
      }
    }
    base.set(token, targets);
  }
  return base;
}

}  // namespace

void PreprocessParams::validate() const {
  auto even = [](std::size_t n, const char* name) {
    if (n < 2 || n % 2 != 0) {
      throw InvalidArgument(std::string(name) +
                            " must be even and at least 2, got " +
                            std::to_string(n));
    }
  };
  even(n_nouns, "noun basis size");
  even(n_verbs, "verb basis size");
  auto cutoff = [](double w, const char* name) {
    if (!(w >= 1.0)) {
      throw InvalidArgument(std::string(name) + " must be at least 1");
    }
  };
  cutoff(w_nouns, "noun distance cutoff");
  cutoff(w_verbs, "verb distance cutoff");
  cutoff(w_vn, "verb-noun distance cutoff");
}

Pattern MeaningSpace::compose(const Pattern& subject_code,
                              const Pattern& verb_code,
                              const Pattern& object_code) const {
  return Pattern::concat(object_code, Pattern::concat(verb_code, subject_code));
}

Pattern MeaningSpace::compose(const std::string& subject_token,
                              const std::string& verb_token,
                              const std::string& object_token) const {
  return compose(subject.codeword(subject_token), verb.codeword(verb_token),
                 object.codeword(object_token));
}

std::optional<MeaningSpace::Decoded> MeaningSpace::decode(
    const Pattern& p) const {
  if (p.width() != width()) return std::nullopt;
  auto s = subject.token_for(slice(p, 0, subject.width()));
  auto v = verb.token_for(slice(p, subject.width(), verb.width()));
  auto o = object.token_for(
      slice(p, subject.width() + verb.width(), object.width()));
  if (!s || !v || !o) return std::nullopt;
  return Decoded{*s, *v, *o};
}

std::string MeaningSpace::label(const Pattern& p) const {
  auto d = decode(p);
  if (!d) return {};
  return d->subject + "," + d->verb + "," + d->object;
}

MeaningSpace space_from_fixture(const MeaningSpaceFixture& fixture) {
  if (!fixture.subject || !fixture.verb || !fixture.object) {
    throw InvalidArgument(
        "fixture must define subject, verb and object bases");
  }
  MeaningSpace space;
  space.subject = fixture_basis(*fixture.subject);
  space.verb = fixture_basis(*fixture.verb);
  space.object = fixture_basis(*fixture.object);
  space.subject_projection = overlay({}, fixture.subject_projection,
                                     space.subject, "subject");
  space.verb_projection =
      overlay({}, fixture.verb_projection, space.verb, "verb");
  space.object_projection =
      overlay({}, fixture.object_projection, space.object, "object");
  return space;
}

CorpusModel build_model(std::vector<TokenOccurrence> occurrences,
                        const PreprocessParams& params,
                        const MeaningSpaceFixture* fixture) {
  params.validate();
  CorpusModel model;
  model.params = params;
  model.occurrences = std::move(occurrences);
  const auto& occ = model.occurrences;

  const bool need_nouns =
      fixture == nullptr || !fixture->subject || !fixture->object;
  BasisSet nouns;
  if (need_nouns) {
    BasisSelection sel = select_basis(occ, Tag::kNoun, params.n_nouns);
    model.noun_basis_short = sel.short_of_candidates;
    nouns = build_basis(occ, sel.tokens, Tag::kNoun, params.reducer,
                        static_cast<unsigned>(params.n_nouns / 2));
  }
  MeaningSpace& space = model.space;
  if (fixture != nullptr && fixture->verb) {
    space.verb = fixture_basis(*fixture->verb);
  } else {
    BasisSelection sel = select_basis(occ, Tag::kVerb, params.n_verbs);
    model.verb_basis_short = sel.short_of_candidates;
    space.verb = build_basis(occ, sel.tokens, Tag::kVerb, params.reducer,
                             static_cast<unsigned>(params.n_verbs / 2));
  }
  space.subject = fixture != nullptr && fixture->subject
                      ? fixture_basis(*fixture->subject)
                      : nouns;
  space.object = fixture != nullptr && fixture->object
                     ? fixture_basis(*fixture->object)
                     : nouns;

  space.subject_projection = project_tokens(
      occ, space.subject, Tag::kSubjectNoun, params.w_nouns, params.reducer);
  space.object_projection = project_tokens(
      occ, space.object, Tag::kObjectNoun, params.w_nouns, params.reducer);
  space.verb_projection = project_tokens(occ, space.verb, Tag::kVerb,
                                         params.w_verbs, params.reducer);
  if (fixture != nullptr) {
    space.subject_projection =
        overlay(std::move(space.subject_projection),
                fixture->subject_projection, space.subject, "subject");
    space.verb_projection = overlay(std::move(space.verb_projection),
                                    fixture->verb_projection, space.verb,
                                    "verb");
    space.object_projection =
        overlay(std::move(space.object_projection), fixture->object_projection,
                space.object, "object");
  }

  model.sentences = form_sentences(model, params);
  model.patterns = unique_patterns(model.sentences);
  return model;
}

}  // namespace qnlp::corpus
