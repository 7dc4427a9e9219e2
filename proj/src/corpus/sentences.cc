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

#include <set>
#include <string>
#include <vector>

#include "qnlp/corpus/corpus_model.h"

namespace qnlp::corpus {
namespace {

struct Slot {
  const std::string* text = nullptr;
  Tag tag = Tag::kOther;
};

std::vector<Pattern> codes_of(const std::set<std::string>& tokens,
                              const BasisSet& basis) {
  std::vector<Pattern> out;
  for (const std::string& t : basis.tokens()) {
    if (tokens.count(t) != 0) out.push_back(basis.codeword(t));
  }
  return out;
}

}  // namespace

std::vector<SentencePattern> form_sentences(const CorpusModel& model,
                                            const PreprocessParams& params) {
  std::size_t length = 0;
  for (const TokenOccurrence& o : model.occurrences) {
    if (!o.positions.empty()) length = std::max(length, o.positions.back() + 1);
  }
  std::vector<Slot> stream(length);
  for (const TokenOccurrence& o : model.occurrences) {
    for (std::size_t p : o.positions) stream[p] = {&o.text, o.tag};
  }

  const MeaningSpace& space = model.space;
  auto window = static_cast<std::size_t>(params.w_vn);
  std::vector<SentencePattern> out;
  for (std::size_t pv = 0; pv < length; ++pv) {
    if (stream[pv].text == nullptr || stream[pv].tag != Tag::kVerb) continue;
    const std::string& verb = *stream[pv].text;
    const std::vector<Pattern> verb_codes =
        codes_of(space.verb_projection[verb], space.verb);
    if (verb_codes.empty()) continue;

    const std::size_t lo = pv >= window ? pv - window : 0;
    const std::size_t hi = std::min(length - 1, pv + window);
    for (std::size_t ps = lo; ps < pv; ++ps) {
      const Slot& s = stream[ps];
      if (s.text == nullptr || !matches_class(s.tag, Tag::kSubjectNoun)) {
        continue;
      }
      const std::vector<Pattern> subject_codes =
          codes_of(space.subject_projection[*s.text], space.subject);
      if (subject_codes.empty()) continue;
      for (std::size_t po = pv + 1; po <= hi; ++po) {
        const Slot& o = stream[po];
        if (o.text == nullptr || !matches_class(o.tag, Tag::kObjectNoun)) {
          continue;
        }
        const std::vector<Pattern> object_codes =
            codes_of(space.object_projection[*o.text], space.object);
        if (object_codes.empty()) continue;

        SentencePattern sp;
        sp.subject_token = *s.text;
        sp.verb_token = verb;
        sp.object_token = *o.text;
        sp.verb_position = pv;
        sp.subject = subject_codes;
        sp.verb = verb_codes;
        sp.object = object_codes;
        for (const Pattern& sc : subject_codes) {
          for (const Pattern& vc : verb_codes) {
            for (const Pattern& oc : object_codes) {
              sp.composed.push_back(space.compose(sc, vc, oc));
            }
          }
        }
        out.push_back(std::move(sp));
      }
    }
  }
  return out;
}

std::vector<Pattern> unique_patterns(
    const std::vector<SentencePattern>& sentences) {
  std::vector<Pattern> out;
  std::set<Pattern> seen;
  for (const SentencePattern& s : sentences) {
    for (const Pattern& p : s.composed) {
      if (seen.insert(p).second) out.push_back(p);
    }
  }
  return out;
}

}  // namespace qnlp::corpus
