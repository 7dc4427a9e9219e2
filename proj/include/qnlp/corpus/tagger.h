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
#include <string>
#include <string_view>
#include <vector>

namespace qnlp::corpus {

// Grammatical class of a token. kNoun matches either side of a sentence;
// kSubjectNoun and kObjectNoun restrict a noun to one side.
enum class Tag { kNoun, kSubjectNoun, kObjectNoun, kVerb, kStopword, kOther };

std::string_view tag_name(Tag tag);
// Inverse of tag_name. Throws ParseError on an unknown name.
Tag parse_tag(std::string_view name);

bool is_noun(Tag tag);
// True when a token tagged `tag` belongs to the class `cls` (kNoun covers
// the subject and object variants).
bool matches_class(Tag tag, Tag cls);

// One token of the corpus stream after tagging.
struct TaggedToken {
  std::string text;
  Tag tag = Tag::kOther;
  std::size_t position = 0;
};

// All occurrences of one (text, tag) pair. positions are strictly increasing.
struct TokenOccurrence {
  std::string text;
  Tag tag = Tag::kOther;
  std::vector<std::size_t> positions;

  std::size_t frequency() const { return positions.size(); }
};

enum class TaggerMode { kBuiltin, kPreTagged };

struct TaggerOptions {
  // Reduce inflected verbs and plural nouns to a base form (builtin mode).
  bool lemmatize = true;
};

// Splits raw text into lowercase word tokens and tags each one. Every word
// token takes a position, including stopwords; punctuation does not.
// Pre-tagged input holds one "token<TAB>tag" pair per line, blank lines and
// '#' comments skipped. Throws InvalidArgument on empty input and
// ParseError on a malformed pre-tagged line.
std::vector<TaggedToken> tag_stream(std::string_view raw, TaggerMode mode,
                                    const TaggerOptions& options = {});

// Groups a tagged stream into occurrences ordered by first position.
std::vector<TokenOccurrence> group_occurrences(
    const std::vector<TaggedToken>& stream);

std::vector<TokenOccurrence> tokenize_and_tag(std::string_view raw,
                                              TaggerMode mode,
                                              const TaggerOptions& options = {});

// Drops the licence header and footer of a Project Gutenberg text. Text
// without the markers is returned unchanged.
std::string_view strip_gutenberg_boilerplate(std::string_view text);

}  // namespace qnlp::corpus
