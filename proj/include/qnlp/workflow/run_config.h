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

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qnlp/corpus/corpus_model.h"

namespace qnlp::workflow {

// Environment variable names of the preprocessing parameters.
inline constexpr const char* kEnvNumBasisNoun = "NUM_BASIS_NOUN";
inline constexpr const char* kEnvNumBasisVerb = "NUM_BASIS_VERB";
inline constexpr const char* kEnvNounCutoff = "BASIS_NOUN_DIST_CUTOFF";
inline constexpr const char* kEnvVerbCutoff = "BASIS_VERB_DIST_CUTOFF";
inline constexpr const char* kEnvVerbNounCutoff = "VERB_NOUN_DIST_CUTOFF";

// Where one parameter's effective value came from, for output headers.
struct ParamRecord {
  std::string name;
  std::optional<std::string> env;
  std::optional<std::string> flag;
  std::optional<double> fixture;
  double value = 0.0;
  std::string source;  // "flag", "env", "fixture" or "default"
};

struct ResolvedParams {
  corpus::PreprocessParams params;
  std::vector<ParamRecord> records;
};

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

// Reads the process environment.
EnvLookup process_env();

// Precedence, highest first: flag, environment, fixture, default. flags
// and fixture are keyed by environment-variable name. Throws
// InvalidArgument on a non-numeric value or when the result fails
// PreprocessParams::validate.
ResolvedParams resolve_params(const EnvLookup& env,
                              const std::map<std::string, std::string>& flags,
                              const std::map<std::string, double>& fixture = {},
                              corpus::Reducer reducer = corpus::Reducer::kMin);

enum class Command { kPrepare, kRepresent, kOverlap, kReportGates };

struct RunConfig {
  Command command = Command::kRepresent;
  // Preprocessing parameters given as flags, keyed by environment name.
  std::map<std::string, std::string> param_flags;
  corpus::Reducer reducer = corpus::Reducer::kMin;
  EnvLookup env = process_env();
  std::optional<std::string> corpus_path;
  bool pre_tagged = false;
  bool lemmatize = true;
  std::optional<std::string> patterns_path;
  std::optional<std::string> model_path;
  std::optional<std::string> fixture_path;
  std::optional<std::string> candidates_path;
  std::vector<std::string> tests;
  std::optional<std::uint64_t> shots;
  std::uint64_t seed = 1;
  std::optional<std::string> out_path;
  // prepare: also write the model's pattern set in the bypass format.
  std::optional<std::string> patterns_out_path;
  bool decomposed = false;

  // Checks the per-command requirements: prepare needs a corpus and --out;
  // the other commands need exactly one of a pattern set or a model; represent
  // needs a test; overlap needs two tests, or one test and candidates;
  // shots must be >= 1 when given. Throws InvalidArgument.
  void validate() const;
};

std::string_view command_name(Command c);

}  // namespace qnlp::workflow
