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

#include "qnlp/corpus/tagger.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <string>
#include <utility>

#include "qnlp/common/errors.h"
#include "qnlp/corpus/lexicon.h"

namespace qnlp::corpus {
namespace {

constexpr std::array<std::pair<Tag, std::string_view>, 6> kTagNames = {{
    {Tag::kNoun, "noun"},
    {Tag::kSubjectNoun, "subject-noun"},
    {Tag::kObjectNoun, "object-noun"},
    {Tag::kVerb, "verb"},
    {Tag::kStopword, "stopword"},
    {Tag::kOther, "other"},
}};

struct RawWord {
  std::string text;  // lowercase, apostrophes normalised to '\''
  bool capitalized = false;
  bool sentence_initial = false;
};

bool is_ascii_alnum(unsigned char c) { return std::isalnum(c) != 0; }

// Scans UTF-8 text into words. A word is a run of ASCII letters and digits
// or non-ASCII letters, with apostrophes kept only between word characters.
// Curly quotes count as apostrophes; other general punctuation separates.
std::vector<RawWord> scan_words(std::string_view text) {
  enum class Kind { kWord, kApostrophe, kBoundary, kSeparator };
  struct Unit {
    Kind kind;
    std::string_view bytes;
  };
  std::vector<Unit> units;
  units.reserve(text.size());
  for (std::size_t i = 0; i < text.size();) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 0x80) {
      Kind kind = Kind::kSeparator;
      if (is_ascii_alnum(c)) {
        kind = Kind::kWord;
      } else if (c == '\'') {
        kind = Kind::kApostrophe;
      } else if (c == '.' || c == '!' || c == '?') {
        kind = Kind::kBoundary;
      }
      units.push_back({kind, text.substr(i, 1)});
      ++i;
      continue;
    }
    std::size_t len = c >= 0xF0 ? 4 : c >= 0xE0 ? 3 : c >= 0xC0 ? 2 : 1;
    len = std::min(len, text.size() - i);
    const std::string_view bytes = text.substr(i, len);
    Kind kind = Kind::kWord;
    if (bytes == "\xE2\x80\x98" || bytes == "\xE2\x80\x99") {
      kind = Kind::kApostrophe;
    } else if (bytes == "\xE2\x80\xA6") {
      kind = Kind::kBoundary;
    } else if (bytes == "\xEF\xBB\xBF" ||
               (len == 3 && c == 0xE2 &&
                (static_cast<unsigned char>(bytes[1]) == 0x80 ||
                 static_cast<unsigned char>(bytes[1]) == 0x81)) ||
               (len == 2 && c == 0xC2)) {
      kind = Kind::kSeparator;
    }
    units.push_back({kind, bytes});
    i += len;
  }

  std::vector<RawWord> words;
  bool sentence_start = true;
  RawWord current;
  bool in_word = false;
  auto flush = [&] {
    if (in_word) {
      words.push_back(std::move(current));
      current = RawWord{};
      in_word = false;
    }
  };
  for (std::size_t k = 0; k < units.size(); ++k) {
    const Unit& u = units[k];
    switch (u.kind) {
      case Kind::kWord:
        if (!in_word) {
          in_word = true;
          current.capitalized = std::isupper(
                                    static_cast<unsigned char>(u.bytes[0])) != 0;
          current.sentence_initial = sentence_start;
          sentence_start = false;
        }
        if (u.bytes.size() == 1) {
          current.text.push_back(static_cast<char>(
              std::tolower(static_cast<unsigned char>(u.bytes[0]))));
        } else {
          current.text.append(u.bytes);
        }
        break;
      case Kind::kApostrophe:
        if (in_word && k + 1 < units.size() &&
            units[k + 1].kind == Kind::kWord) {
          current.text.push_back('\'');
        } else {
          flush();
        }
        break;
      case Kind::kBoundary:
        flush();
        sentence_start = true;
        break;
      case Kind::kSeparator:
        flush();
        break;
    }
  }
  flush();
  return words;
}

// Resolves contractions: stopword contractions stay whole, a possessive
// "'s" is dropped, and anything else keeps the part before the apostrophe.
std::string normalise_contraction(const std::string& word) {
  const auto apos = word.find('\'');
  if (apos == std::string::npos || lexicon::is_stopword(word)) return word;
  if (word.size() >= 2 && word.compare(word.size() - 2, 2, "'s") == 0) {
    return word.substr(0, word.size() - 2);
  }
  return word.substr(0, apos);
}

bool all_digits(const std::string& w) {
  return std::all_of(w.begin(), w.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
}

bool ends_with(const std::string& w, std::string_view suffix) {
  return w.size() > suffix.size() + 1 &&
         w.compare(w.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// True when w ends with `suffix` and the remaining stem holds a vowel, so
// "thing" and "bed" do not read as inflections.
bool inflected(const std::string& w, std::string_view suffix) {
  if (!ends_with(w, suffix)) return false;
  const std::string_view stem =
      std::string_view(w).substr(0, w.size() - suffix.size());
  return stem.find_first_of("aeiouy") != std::string_view::npos;
}

Tag suffix_tag(const std::string& w) {
  if (ends_with(w, "ly")) return Tag::kOther;
  if (inflected(w, "ing") || inflected(w, "ed")) return Tag::kVerb;
  for (std::string_view s : {"ful", "ous", "ish", "ive", "able", "ible",
                             "less", "est"}) {
    if (ends_with(w, s)) return Tag::kOther;
  }
  return Tag::kNoun;
}

struct Context {
  const std::string* prev_word = nullptr;
  Tag prev_tag = Tag::kOther;
};

Tag builtin_tag(const RawWord& raw, const std::string& word,
                const Context& ctx) {
  if (lexicon::is_stopword(word)) return Tag::kStopword;
  if (all_digits(word)) return Tag::kOther;
  if (lexicon::is_other(word)) return Tag::kOther;
  if (lexicon::is_verb(word)) return Tag::kVerb;
  if (raw.capitalized && !raw.sentence_initial) return Tag::kNoun;
  if (ctx.prev_word != nullptr) {
    if (lexicon::is_determiner(*ctx.prev_word)) return Tag::kNoun;
    if (lexicon::precedes_verb(*ctx.prev_word)) return Tag::kVerb;
    if (ctx.prev_tag == Tag::kNoun && word.back() == 's' &&
        !ends_with(word, "ss")) {
      return Tag::kVerb;
    }
    if (ctx.prev_tag == Tag::kVerb) return Tag::kNoun;
  }
  return suffix_tag(word);
}

std::vector<TaggedToken> tag_builtin(std::string_view raw,
                                     const TaggerOptions& options) {
  std::vector<TaggedToken> out;
  Context ctx;
  std::string prev_storage;
  for (const RawWord& w : scan_words(raw)) {
    if (w.sentence_initial) ctx = Context{};
    const std::string word = normalise_contraction(w.text);
    if (word.empty()) continue;
    const Tag tag = builtin_tag(w, word, ctx);
    std::string text = word;
    if (options.lemmatize) {
      if (tag == Tag::kVerb) text = lexicon::verb_lemma(word);
      if (tag == Tag::kNoun) text = lexicon::noun_lemma(word);
    }
    out.push_back({std::move(text), tag, out.size()});
    prev_storage = word;
    ctx.prev_word = &prev_storage;
    ctx.prev_tag = tag;
  }
  return out;
}

std::vector<TaggedToken> tag_pre_tagged(std::string_view raw) {
  std::vector<TaggedToken> out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= raw.size()) {
    std::size_t end = raw.find('\n', start);
    if (end == std::string_view::npos) end = raw.size();
    std::string_view line = raw.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') {
      if (end == raw.size()) break;
      continue;
    }
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos ||
        line.find('\t', tab + 1) != std::string_view::npos) {
      throw ParseError("expected \"token<TAB>tag\"", line_no);
    }
    std::string_view token = line.substr(0, tab);
    std::string_view tag_text = line.substr(tab + 1);
    if (token.empty()) throw ParseError("empty token", line_no);
    Tag tag;
    try {
      tag = parse_tag(tag_text);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
    std::string text;
    bool alnum = false;
    for (char c : token) {
      const auto uc = static_cast<unsigned char>(c);
      alnum = alnum || is_ascii_alnum(uc) || uc >= 0x80;
      text.push_back(static_cast<char>(std::tolower(uc)));
    }
    if (alnum) out.push_back({std::move(text), tag, out.size()});
    if (end == raw.size()) break;
  }
  return out;
}

}  // namespace

std::string_view tag_name(Tag tag) {
  for (const auto& [t, name] : kTagNames) {
    if (t == tag) return name;
  }
  return "other";
}

Tag parse_tag(std::string_view name) {
  for (const auto& [t, n] : kTagNames) {
    if (n == name) return t;
  }
  throw ParseError("unknown tag \"" + std::string(name) + "\"");
}

bool is_noun(Tag tag) {
  return tag == Tag::kNoun || tag == Tag::kSubjectNoun ||
         tag == Tag::kObjectNoun;
}

bool matches_class(Tag tag, Tag cls) {
  if (cls == Tag::kNoun) return is_noun(tag);
  if (cls == Tag::kSubjectNoun || cls == Tag::kObjectNoun) {
    return tag == cls || tag == Tag::kNoun;
  }
  return tag == cls;
}

std::vector<TaggedToken> tag_stream(std::string_view raw, TaggerMode mode,
                                    const TaggerOptions& options) {
  if (std::all_of(raw.begin(), raw.end(), [](char c) {
        return std::isspace(static_cast<unsigned char>(c)) != 0;
      })) {
    throw InvalidArgument("empty corpus");
  }
  return mode == TaggerMode::kPreTagged ? tag_pre_tagged(raw)
                                        : tag_builtin(raw, options);
}

std::vector<TokenOccurrence> group_occurrences(
    const std::vector<TaggedToken>& stream) {
  std::vector<TokenOccurrence> out;
  std::map<std::pair<std::string, Tag>, std::size_t> index;
  for (const TaggedToken& t : stream) {
    auto [it, inserted] = index.try_emplace({t.text, t.tag}, out.size());
    if (inserted) out.push_back({t.text, t.tag, {}});
    out[it->second].positions.push_back(t.position);
  }
  return out;
}

std::vector<TokenOccurrence> tokenize_and_tag(std::string_view raw,
                                              TaggerMode mode,
                                              const TaggerOptions& options) {
  return group_occurrences(tag_stream(raw, mode, options));
}

std::string_view strip_gutenberg_boilerplate(std::string_view text) {
  constexpr std::string_view kStart = "*** START OF";
  constexpr std::string_view kEnd = "*** END OF";
  constexpr std::string_view kEndPlain = "End of Project Gutenberg";
  if (auto s = text.find(kStart); s != std::string_view::npos) {
    auto eol = text.find('\n', s);
    text = eol == std::string_view::npos ? std::string_view{}
                                         : text.substr(eol + 1);
  }
  for (std::string_view marker : {kEndPlain, kEnd}) {
    if (auto e = text.find(marker); e != std::string_view::npos) {
      text = text.substr(0, e);
    }
  }
  return text;
}

}  // namespace qnlp::corpus
