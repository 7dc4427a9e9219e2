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

#include "qnlp/workflow/run_config.h"

#include <charconv>
#include <cstdlib>
#include <string>

#include "qnlp/common/errors.h"

namespace qnlp::workflow {
namespace {

double parse_number(const std::string& name, const std::string& text) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw InvalidArgument(name + ": \"" + text + "\" is not a number");
  }
  return value;
}

std::size_t as_count(const std::string& name, double v) {
  if (v < 0 || v != static_cast<double>(static_cast<std::size_t>(v))) {
    throw InvalidArgument(name + " must be a non-negative integer");
  }
  return static_cast<std::size_t>(v);
}

}  // namespace

EnvLookup process_env() {
  return [](const std::string& name) -> std::optional<std::string> {
    const char* v = std::getenv(name.c_str());
    if (v == nullptr || *v == '\0') return std::nullopt;
    return std::string(v);
  };
}

ResolvedParams resolve_params(const EnvLookup& env,
                              const std::map<std::string, std::string>& flags,
                              const std::map<std::string, double>& fixture,
                              corpus::Reducer reducer) {
  const corpus::PreprocessParams defaults;
  struct Slot {
    const char* name;
    double fallback;
  };
  const Slot slots[] = {
      {kEnvNumBasisNoun, static_cast<double>(defaults.n_nouns)},
      {kEnvNumBasisVerb, static_cast<double>(defaults.n_verbs)},
      {kEnvNounCutoff, defaults.w_nouns},
      {kEnvVerbCutoff, defaults.w_verbs},
      {kEnvVerbNounCutoff, defaults.w_vn},
  };
  for (const auto& [key, value] : flags) {
    bool known = false;
    for (const Slot& s : slots) known = known || key == s.name;
    if (!known) throw InvalidArgument("unknown parameter " + key);
  }

  ResolvedParams out;
  for (const Slot& s : slots) {
    ParamRecord r;
    r.name = s.name;
    r.env = env(s.name);
    if (auto it = flags.find(s.name); it != flags.end()) r.flag = it->second;
    if (auto it = fixture.find(s.name); it != fixture.end()) {
      r.fixture = it->second;
    }
    if (r.flag) {
      r.value = parse_number(r.name, *r.flag);
      r.source = "flag";
    } else if (r.env) {
      r.value = parse_number(r.name, *r.env);
      r.source = "env";
    } else if (r.fixture) {
      r.value = *r.fixture;
      r.source = "fixture";
    } else {
      r.value = s.fallback;
      r.source = "default";
    }
    out.records.push_back(std::move(r));
  }
  corpus::PreprocessParams& p = out.params;
  p.n_nouns = as_count(kEnvNumBasisNoun, out.records[0].value);
  p.n_verbs = as_count(kEnvNumBasisVerb, out.records[1].value);
  p.w_nouns = out.records[2].value;
  p.w_verbs = out.records[3].value;
  p.w_vn = out.records[4].value;
  p.reducer = reducer;
  p.validate();
  return out;
}

std::string_view command_name(Command c) {
  switch (c) {
    case Command::kPrepare:
      return "prepare";
    case Command::kRepresent:
      return "represent";
    case Command::kOverlap:
      return "overlap";
    case Command::kReportGates:
      return "report-gates";
  }
  return "unknown";
}

void RunConfig::validate() const {
  if (shots && *shots == 0) throw InvalidArgument("--shots must be at least 1");
  if (command == Command::kPrepare) {
    if (!corpus_path) throw InvalidArgument("prepare needs --corpus");
    if (!out_path) throw InvalidArgument("prepare needs --out for the model");
    if (patterns_path) {
      throw InvalidArgument("prepare takes a corpus, not a pattern set");
    }
    return;
  }
  if (patterns_path.has_value() == model_path.has_value()) {
    throw InvalidArgument("give exactly one of --patterns or --model");
  }
  if (corpus_path) {
    throw InvalidArgument(std::string(command_name(command)) +
                          " reads a pattern set or model, not a corpus");
  }
  if (command == Command::kRepresent && tests.empty()) {
    throw InvalidArgument("represent needs at least one --test");
  }
  if (command == Command::kOverlap && tests.size() < 2 &&
      !(tests.size() == 1 && candidates_path)) {
    throw InvalidArgument(
        "overlap needs two --test patterns, or one and --candidates");
  }
}

}  // namespace qnlp::workflow
