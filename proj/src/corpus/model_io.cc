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

#include "qnlp/corpus/model_io.h"

#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "json.hpp"
#include "qnlp/common/errors.h"

namespace qnlp::corpus {
namespace {

using nlohmann::json;

json basis_to_json(const BasisSet& b) {
  json codes = json::array();
  for (std::size_t i = 0; i < b.size(); ++i) {
    codes.push_back(b.code()[i].to_string());
  }
  return {{"width", b.width()}, {"tokens", b.tokens()}, {"codes", codes}};
}

BasisSet basis_from_json(const json& j, const char* name) {
  const auto width = j.at("width").get<unsigned>();
  BasisSet b = assign_codes(j.at("tokens").get<std::vector<std::string>>(),
                            generate_cyclic_code(width));
  if (j.contains("codes")) {
    const auto codes = j.at("codes").get<std::vector<std::string>>();
    if (codes.size() != b.size()) {
      throw ParseError(std::string(name) + " basis: code count mismatch");
    }
    for (std::size_t i = 0; i < codes.size(); ++i) {
      if (Pattern::parse(codes[i]) != b.code()[i]) {
        throw ParseError(std::string(name) + " basis: code " + codes[i] +
                         " of \"" + b.tokens()[i] +
                         "\" disagrees with the cyclic code");
      }
    }
  }
  return b;
}

json projection_to_json(const ProjectionMap& m) {
  json out = json::object();
  for (const auto& [token, targets] : m.entries()) out[token] = targets;
  return out;
}

ProjectionMap::Entries projection_from_json(const json& j) {
  ProjectionMap::Entries out;
  for (const auto& [token, targets] : j.items()) {
    auto list = targets.get<std::vector<std::string>>();
    out[token] = std::set<std::string>(list.begin(), list.end());
  }
  return out;
}

json patterns_to_json(const std::vector<Pattern>& ps) {
  json out = json::array();
  for (const Pattern& p : ps) out.push_back(p.to_string());
  return out;
}

std::vector<Pattern> patterns_from_json(const json& j) {
  std::vector<Pattern> out;
  for (const auto& s : j) out.push_back(Pattern::parse(s.get<std::string>()));
  return out;
}

json params_to_json(const PreprocessParams& p) {
  return {{"n_nouns", p.n_nouns}, {"n_verbs", p.n_verbs},
          {"w_nouns", p.w_nouns}, {"w_verbs", p.w_verbs},
          {"w_vn", p.w_vn},       {"reducer", reducer_name(p.reducer)}};
}

PreprocessParams params_from_json(const json& j) {
  PreprocessParams p;
  p.n_nouns = j.at("n_nouns").get<std::size_t>();
  p.n_verbs = j.at("n_verbs").get<std::size_t>();
  p.w_nouns = j.at("w_nouns").get<double>();
  p.w_verbs = j.at("w_verbs").get<double>();
  p.w_vn = j.at("w_vn").get<double>();
  p.reducer = parse_reducer(j.at("reducer").get<std::string>());
  return p;
}

template <typename F>
auto guarded(F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
}

json parse_document(std::istream& in) {
  return guarded([&] { return json::parse(in); });
}

}  // namespace

void write_model(std::ostream& out, const CorpusModel& model) {
  const MeaningSpace& s = model.space;
  json tokens = json::array();
  for (const TokenOccurrence& o : model.occurrences) {
    tokens.push_back(
        {{"text", o.text}, {"tag", tag_name(o.tag)}, {"positions", o.positions}});
  }
  json sentences = json::array();
  for (const SentencePattern& sp : model.sentences) {
    sentences.push_back({{"subject", sp.subject_token},
                         {"verb", sp.verb_token},
                         {"object", sp.object_token},
                         {"verb_position", sp.verb_position},
                         {"subject_codes", patterns_to_json(sp.subject)},
                         {"verb_codes", patterns_to_json(sp.verb)},
                         {"object_codes", patterns_to_json(sp.object)},
                         {"composed", patterns_to_json(sp.composed)}});
  }
  json patterns = json::array();
  for (const Pattern& p : model.patterns) {
    patterns.push_back({{"bits", p.to_string()}, {"label", s.label(p)}});
  }
  json doc = {
      {"format_version", kModelFormatVersion},
      {"params", params_to_json(model.params)},
      {"warnings",
       {{"noun_basis_short", model.noun_basis_short},
        {"verb_basis_short", model.verb_basis_short}}},
      {"bases",
       {{"subject", basis_to_json(s.subject)},
        {"verb", basis_to_json(s.verb)},
        {"object", basis_to_json(s.object)}}},
      {"projections",
       {{"subject", projection_to_json(s.subject_projection)},
        {"verb", projection_to_json(s.verb_projection)},
        {"object", projection_to_json(s.object_projection)}}},
      {"tokens", tokens},
      {"sentences", sentences},
      {"patterns", patterns}};
  out << doc.dump(1) << '\n';
}

CorpusModel read_model(std::istream& in) {
  const json doc = parse_document(in);
  return guarded([&] {
    const int version = doc.at("format_version").get<int>();
    if (version != kModelFormatVersion) {
      throw ParseError("unsupported model format_version " +
                       std::to_string(version));
    }
    CorpusModel m;
    m.params = params_from_json(doc.at("params"));
    if (doc.contains("warnings")) {
      m.noun_basis_short = doc["warnings"].value("noun_basis_short", false);
      m.verb_basis_short = doc["warnings"].value("verb_basis_short", false);
    }
    const json& bases = doc.at("bases");
    m.space.subject = basis_from_json(bases.at("subject"), "subject");
    m.space.verb = basis_from_json(bases.at("verb"), "verb");
    m.space.object = basis_from_json(bases.at("object"), "object");
    const json& proj = doc.at("projections");
    m.space.subject_projection =
        ProjectionMap(projection_from_json(proj.at("subject")));
    m.space.verb_projection = ProjectionMap(projection_from_json(proj.at("verb")));
    m.space.object_projection =
        ProjectionMap(projection_from_json(proj.at("object")));
    for (const json& t : doc.at("tokens")) {
      m.occurrences.push_back(
          {t.at("text").get<std::string>(),
           parse_tag(t.at("tag").get<std::string>()),
           t.at("positions").get<std::vector<std::size_t>>()});
    }
    for (const json& s : doc.at("sentences")) {
      SentencePattern sp;
      sp.subject_token = s.at("subject").get<std::string>();
      sp.verb_token = s.at("verb").get<std::string>();
      sp.object_token = s.at("object").get<std::string>();
      sp.verb_position = s.at("verb_position").get<std::size_t>();
      sp.subject = patterns_from_json(s.at("subject_codes"));
      sp.verb = patterns_from_json(s.at("verb_codes"));
      sp.object = patterns_from_json(s.at("object_codes"));
      sp.composed = patterns_from_json(s.at("composed"));
      m.sentences.push_back(std::move(sp));
    }
    for (const json& p : doc.at("patterns")) {
      m.patterns.push_back(Pattern::parse(p.at("bits").get<std::string>()));
    }
    return m;
  });
}

void save_model(const std::string& path, const CorpusModel& model) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write model file " + path);
  write_model(out, model);
  if (!out) throw Error("failed writing model file " + path);
}

CorpusModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read model file " + path);
  return read_model(in);
}

MeaningSpaceFixture read_fixture(std::istream& in) {
  const json doc = parse_document(in);
  return guarded([&] {
    MeaningSpaceFixture f;
    if (doc.contains("bases")) {
      const json& bases = doc["bases"];
      auto basis = [&](const char* key)
          -> std::optional<MeaningSpaceFixture::Basis> {
        if (!bases.contains(key)) return std::nullopt;
        MeaningSpaceFixture::Basis b;
        b.tokens = bases[key].at("tokens").get<std::vector<std::string>>();
        b.width = bases[key].value("width", 0U);
        return b;
      };
      f.subject = basis("subject");
      f.verb = basis("verb");
      f.object = basis("object");
    }
    if (doc.contains("projections")) {
      const json& proj = doc["projections"];
      if (proj.contains("subject")) {
        f.subject_projection = projection_from_json(proj["subject"]);
      }
      if (proj.contains("verb")) {
        f.verb_projection = projection_from_json(proj["verb"]);
      }
      if (proj.contains("object")) {
        f.object_projection = projection_from_json(proj["object"]);
      }
    }
    if (doc.contains("params")) {
      for (const auto& [key, value] : doc["params"].items()) {
        f.params[key] = value.get<double>();
      }
    }
    return f;
  });
}

MeaningSpaceFixture load_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read fixture file " + path);
  return read_fixture(in);
}

}  // namespace qnlp::corpus
