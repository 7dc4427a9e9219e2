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

#include <string>
#include <string_view>

namespace qnlp::corpus::lexicon {

bool is_stopword(std::string_view word);
bool is_determiner(std::string_view word);
// Pronouns, modals and the infinitive marker: words usually followed by a verb.
bool precedes_verb(std::string_view word);
bool is_modal(std::string_view word);

// Known verb in any inflection.
bool is_verb(std::string_view word);
// Known adjective, adverb, preposition, interjection or numeral.
bool is_other(std::string_view word);

// Base form of a verb; the word itself when no rule applies.
std::string verb_lemma(std::string_view word);
// Singular form of a noun; the word itself when no rule applies.
std::string noun_lemma(std::string_view word);

}  // namespace qnlp::corpus::lexicon
