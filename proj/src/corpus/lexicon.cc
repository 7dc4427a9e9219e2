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

#include "qnlp/corpus/lexicon.h"

#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

namespace qnlp::corpus::lexicon {
namespace {

using WordSet = std::unordered_set<std::string_view>;
using WordMap = std::unordered_map<std::string_view, std::string_view>;

// English stopwords as distributed with the NLTK corpora.
const WordSet& stopwords() {
  static const WordSet kWords = {
      "i", "me", "my", "myself", "we", "our", "ours", "ourselves", "you",
      "you're", "you've", "you'll", "you'd", "your", "yours", "yourself",
      "yourselves", "he", "him", "his", "himself", "she", "she's", "her",
      "hers", "herself", "it", "it's", "its", "itself", "they", "them",
      "their", "theirs", "themselves", "what", "which", "who", "whom", "this",
      "that", "that'll", "these", "those", "am", "is", "are", "was", "were",
      "be", "been", "being", "have", "has", "had", "having", "do", "does",
      "did", "doing", "a", "an", "the", "and", "but", "if", "or", "because",
      "as", "until", "while", "of", "at", "by", "for", "with", "about",
      "against", "between", "into", "through", "during", "before", "after",
      "above", "below", "to", "from", "up", "down", "in", "out", "on", "off",
      "over", "under", "again", "further", "then", "once", "here", "there",
      "when", "where", "why", "how", "all", "any", "both", "each", "few",
      "more", "most", "other", "some", "such", "no", "nor", "not", "only",
      "own", "same", "so", "than", "too", "very", "s", "t", "can", "will",
      "just", "don", "don't", "should", "should've", "now", "d", "ll", "m",
      "o", "re", "ve", "y", "ain", "aren", "aren't", "couldn", "couldn't",
      "didn", "didn't", "doesn", "doesn't", "hadn", "hadn't", "hasn",
      "hasn't", "haven", "haven't", "isn", "isn't", "ma", "mightn",
      "mightn't", "mustn", "mustn't", "needn", "needn't", "shan", "shan't",
      "shouldn", "shouldn't", "wasn", "wasn't", "weren", "weren't", "won",
      "won't", "wouldn", "wouldn't"};
  return kWords;
}

const WordSet& determiners() {
  static const WordSet kWords = {
      "the", "a", "an", "this", "that", "these", "those", "my", "your",
      "his", "her", "its", "our", "their", "some", "any", "no", "every",
      "each", "another", "either", "neither", "which", "what", "whose"};
  return kWords;
}

const WordSet& modals() {
  static const WordSet kWords = {"would", "could", "might", "must", "shall",
                                 "should", "can", "will", "may", "ought"};
  return kWords;
}

const WordSet& verb_leaders() {
  static const WordSet kWords = {"i", "you", "he", "she", "we", "they",
                                 "it", "to", "who", "don't", "didn't",
                                 "doesn't", "not"};
  return kWords;
}

// Irregular verb forms.
const WordMap& irregular_verbs() {
  static const WordMap kForms = {
      {"said", "say"},       {"says", "say"},        {"went", "go"},
      {"gone", "go"},        {"goes", "go"},         {"thought", "think"},
      {"knew", "know"},      {"known", "know"},      {"saw", "see"},
      {"seen", "see"},       {"began", "begin"},     {"begun", "begin"},
      {"came", "come"},      {"got", "get"},         {"gotten", "get"},
      {"took", "take"},      {"taken", "take"},      {"made", "make"},
      {"found", "find"},     {"felt", "feel"},       {"heard", "hear"},
      {"ran", "run"},        {"sat", "sit"},         {"told", "tell"},
      {"gave", "give"},      {"given", "give"},      {"left", "leave"},
      {"kept", "keep"},      {"spoke", "speak"},     {"spoken", "speak"},
      {"wrote", "write"},    {"written", "write"},   {"grew", "grow"},
      {"grown", "grow"},     {"stood", "stand"},     {"ate", "eat"},
      {"eaten", "eat"},      {"drew", "draw"},       {"drawn", "draw"},
      {"fell", "fall"},      {"fallen", "fall"},     {"held", "hold"},
      {"meant", "mean"},     {"brought", "bring"},   {"bought", "buy"},
      {"caught", "catch"},   {"taught", "teach"},    {"sought", "seek"},
      {"fought", "fight"},   {"sang", "sing"},       {"sung", "sing"},
      {"swam", "swim"},      {"drank", "drink"},     {"shook", "shake"},
      {"shaken", "shake"},   {"woke", "wake"},       {"broke", "break"},
      {"broken", "break"},   {"chose", "choose"},    {"flew", "fly"},
      {"threw", "throw"},    {"thrown", "throw"},    {"hid", "hide"},
      {"hidden", "hide"},    {"lay", "lie"},         {"led", "lead"},
      {"lost", "lose"},      {"sent", "send"},       {"spent", "spend"},
      {"slept", "sleep"},    {"swept", "sweep"},     {"wept", "weep"},
      {"won", "win"},        {"wore", "wear"},       {"worn", "wear"},
      {"risen", "rise"},      {"rode", "ride"},
      {"bitten", "bite"},     {"forgot", "forget"},
      {"forgotten", "forget"}, {"understood", "understand"},
      {"became", "become"},  {"dreamt", "dream"},    {"learnt", "learn"},
      {"burnt", "burn"},     {"sank", "sink"},       {"sunk", "sink"},
      {"stole", "steal"},    {"struck", "strike"},   {"hung", "hang"},
      {"dug", "dig"},        {"fed", "feed"},        {"met", "meet"},
      {"paid", "pay"},       {"did", "do"},          {"does", "do"},
      {"done", "do"},        {"has", "have"},        {"had", "have"}};
  return kForms;
}

// Base forms of verbs the tagger recognises in any regular inflection.
const WordSet& base_verbs() {
  static const WordSet kWords = {
      "say", "go", "think", "know", "see", "begin", "come", "get", "take",
      "make", "find", "feel", "hear", "run", "sit", "tell", "give", "leave",
      "keep", "speak", "write", "grow", "stand", "eat", "draw", "fall",
      "hold", "mean", "bring", "buy", "catch", "teach", "seek", "fight",
      "sing", "swim", "drink", "shake", "wake", "break", "choose", "fly",
      "throw", "hide", "lie", "lead", "lose", "send", "spend", "sleep",
      "sweep", "weep", "win", "wear", "rise", "ride", "bite", "forget",
      "understand", "become", "dream", "learn", "burn", "sink", "steal",
      "strike", "hang", "dig", "feed", "meet", "pay", "look", "want",
      "try", "ask", "seem", "talk", "walk", "turn", "call", "cry", "wonder",
      "remember", "like", "live", "move", "rest", "reply", "add", "wish",
      "hope", "happen", "open", "shut", "close", "play", "help", "put",
      "let", "set", "cut", "read", "hurry", "jump", "pass", "pull", "push",
      "shout", "sigh", "smile", "laugh", "nod", "notice", "listen", "watch",
      "wait", "stop", "continue", "finish", "explain", "repeat", "believe",
      "suppose", "guess", "mind", "care", "hate", "love", "die", "kill",
      "beg", "cry", "scream", "whisper", "answer", "interrupt", "follow",
      "join", "carry", "change", "dance", "fetch", "kiss", "knock", "marry",
      "order", "pick", "reach", "remark", "send", "settle", "shriek", "sneeze",
      "squeak", "stare", "taste", "tremble", "vanish", "work", "use", "show",
      "need", "become", "return", "agree", "appear", "argue", "offer",
      "manage", "decide", "fancy", "exclaim", "inquire", "observe",
      "swallow", "yawn", "grin", "frown", "crawl", "creep", "climb",
      "hurt", "let", "behead", "execute", "sob", "sulk", "sniff"};
  return kWords;
}

// Adjectives, adverbs, prepositions, interjections and numerals that the
// stopword list leaves open.
const WordSet& other_words() {
  static const WordSet kWords = {
      "little", "mock", "much", "well", "quite", "first", "one", "two",
      "three", "four", "five", "six", "seven", "eight", "nine", "ten",
      "hundred", "thousand", "like", "never", "ever", "back", "round",
      "away", "upon", "oh", "however", "soon", "still", "rather", "without",
      "yet", "also", "even", "perhaps", "indeed", "sure", "great", "large",
      "small", "long", "last", "next", "many", "something", "anything",
      "nothing", "everything", "somebody", "anybody", "nobody", "everybody",
      "someone", "anyone", "everyone", "good", "bad", "big", "old", "new",
      "whole", "poor", "dear", "curious", "ready", "else", "always",
      "almost", "already", "enough", "far", "near", "along", "across",
      "behind", "beside", "besides", "towards", "toward", "among", "around",
      "within", "though", "although", "unless", "whether", "since",
      "either", "neither", "really", "certainly", "suddenly", "exactly",
      "afterwards", "anyhow", "anyway", "somehow", "sometimes", "often",
      "ah", "yes", "please", "thank", "hm", "hush", "alas", "shan",
      "another", "every", "half", "high", "low", "right", "wrong", "true",
      "sort", "kind", "least", "less", "best", "better", "worse", "worst",
      "only", "own", "else", "ago", "aloud", "together", "instead", "twice",
      "everywhere", "somewhere", "anywhere", "nowhere", "tis", "ll", "ve",
      "dreadfully", "grand", "white", "red", "tiny", "short", "tall",
      "deep", "hot", "cold", "nice", "strange", "queer", "funny", "glad",
      "sudden", "certain", "several", "pretty", "sharp", "loud", "low",
      "thick", "busy", "gently", "whose", "shall", "oop"};
  return kWords;
}

bool ends_with(std::string_view w, std::string_view suffix) {
  return w.size() > suffix.size() &&
         w.substr(w.size() - suffix.size()) == suffix;
}

bool is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

// Tries the regular inflection rules and returns a base verb, or "".
std::string regular_verb_base(std::string_view w) {
  auto known = [](std::string_view base) {
    return base_verbs().count(base) != 0;
  };
  auto try_stem = [&](std::string_view stem) -> std::string {
    if (stem.empty()) return {};
    if (known(stem)) return std::string(stem);
    std::string with_e = std::string(stem) + "e";
    if (known(with_e)) return with_e;
    if (stem.size() >= 2 && stem[stem.size() - 1] == stem[stem.size() - 2] &&
        !is_vowel(stem.back())) {
      std::string_view single = stem.substr(0, stem.size() - 1);
      if (known(single)) return std::string(single);
    }
    if (stem.back() == 'i') {
      std::string y = std::string(stem.substr(0, stem.size() - 1)) + "y";
      if (known(y)) return y;
    }
    return {};
  };
  if (ends_with(w, "ing")) return try_stem(w.substr(0, w.size() - 3));
  if (ends_with(w, "ed")) return try_stem(w.substr(0, w.size() - 2));
  if (ends_with(w, "ies")) {
    std::string y = std::string(w.substr(0, w.size() - 3)) + "y";
    if (known(y)) return y;
  }
  if (ends_with(w, "es")) {
    if (auto b = try_stem(w.substr(0, w.size() - 2)); !b.empty()) return b;
  }
  if (ends_with(w, "s") && known(w.substr(0, w.size() - 1))) {
    return std::string(w.substr(0, w.size() - 1));
  }
  return {};
}

const WordMap& irregular_nouns() {
  static const WordMap kForms = {
      {"mice", "mouse"},     {"feet", "foot"},   {"children", "child"},
      {"men", "man"},        {"women", "woman"}, {"teeth", "tooth"},
      {"geese", "goose"},    {"people", "person"}, {"lobsters", "lobster"},
      {"knives", "knife"},   {"wives", "wife"},  {"leaves", "leaf"},
      {"loaves", "loaf"},    {"lives", "life"},  {"selves", "self"}};
  return kForms;
}

}  // namespace

bool is_stopword(std::string_view word) {
  return stopwords().count(word) != 0;
}

bool is_determiner(std::string_view word) {
  return determiners().count(word) != 0;
}

bool is_modal(std::string_view word) { return modals().count(word) != 0; }

bool precedes_verb(std::string_view word) {
  return verb_leaders().count(word) != 0 || is_modal(word);
}

bool is_verb(std::string_view word) {
  if (is_modal(word)) return true;
  if (base_verbs().count(word) != 0) return true;
  if (irregular_verbs().count(word) != 0) return true;
  return !regular_verb_base(word).empty();
}

bool is_other(std::string_view word) {
  return other_words().count(word) != 0;
}

std::string verb_lemma(std::string_view word) {
  if (auto it = irregular_verbs().find(word); it != irregular_verbs().end()) {
    return std::string(it->second);
  }
  if (base_verbs().count(word) != 0 || is_modal(word)) {
    return std::string(word);
  }
  if (auto base = regular_verb_base(word); !base.empty()) return base;
  return std::string(word);
}

std::string noun_lemma(std::string_view word) {
  if (auto it = irregular_nouns().find(word); it != irregular_nouns().end()) {
    return std::string(it->second);
  }
  if (word.size() <= 3) return std::string(word);
  if (ends_with(word, "ss") || ends_with(word, "us") || ends_with(word, "is")) {
    return std::string(word);
  }
  if (ends_with(word, "ies")) {
    return std::string(word.substr(0, word.size() - 3)) + "y";
  }
  for (std::string_view sibilant : {"ches", "shes", "sses", "xes", "zes"}) {
    if (ends_with(word, sibilant)) {
      return std::string(word.substr(0, word.size() - 2));
    }
  }
  if (word.back() == 's') return std::string(word.substr(0, word.size() - 1));
  return std::string(word);
}

}  // namespace qnlp::corpus::lexicon
