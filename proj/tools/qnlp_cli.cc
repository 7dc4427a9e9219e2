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

// Command-line front end: prepare, represent, overlap, report-gates.
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qnlp/common/errors.h"
#include "qnlp/workflow/commands.h"
#include "qnlp/workflow/run_config.h"

namespace {

using qnlp::workflow::Command;
using qnlp::workflow::RunConfig;

struct Options {
  RunConfig config;
  std::map<std::string, std::optional<std::string>> params = {
      {qnlp::workflow::kEnvNumBasisNoun, std::nullopt},
      {qnlp::workflow::kEnvNumBasisVerb, std::nullopt},
      {qnlp::workflow::kEnvNounCutoff, std::nullopt},
      {qnlp::workflow::kEnvVerbCutoff, std::nullopt},
      {qnlp::workflow::kEnvVerbNounCutoff, std::nullopt},
  };
  std::string reducer = "min";
  bool no_lemmatize = false;
  std::optional<std::uint64_t> shots_given;
};

void add_memory_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--patterns", o.config.patterns_path,
                  "Pattern-set file: one bit-string and optional label per line");
  cmd->add_option("--model", o.config.model_path,
                  "Corpus model written by prepare");
  cmd->add_option("--fixture", o.config.fixture_path,
                  "JSON meaning-space fixture used to resolve token triples");
  cmd->add_option("--out", o.config.out_path, "Output file (default stdout)");
  cmd->add_option("--seed", o.config.seed, "Sampling seed")->capture_default_str();
  cmd->add_flag("--decomposed", o.config.decomposed,
                "Execute multi-controlled gates gate by gate");
}

void add_param_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--num-basis-noun", o.params[qnlp::workflow::kEnvNumBasisNoun],
                  "Noun basis size (env NUM_BASIS_NOUN)");
  cmd->add_option("--num-basis-verb", o.params[qnlp::workflow::kEnvNumBasisVerb],
                  "Verb basis size (env NUM_BASIS_VERB)");
  cmd->add_option("--noun-cutoff", o.params[qnlp::workflow::kEnvNounCutoff],
                  "Noun projection cutoff (env BASIS_NOUN_DIST_CUTOFF)");
  cmd->add_option("--verb-cutoff", o.params[qnlp::workflow::kEnvVerbCutoff],
                  "Verb projection cutoff (env BASIS_VERB_DIST_CUTOFF)");
  cmd->add_option("--verb-noun-cutoff",
                  o.params[qnlp::workflow::kEnvVerbNounCutoff],
                  "Verb-noun window (env VERB_NOUN_DIST_CUTOFF)");
  cmd->add_option("--reducer", o.reducer, "Distance reducer: min, mean, median")
      ->capture_default_str();
}

void finalize(Options& o) {
  for (const auto& [name, value] : o.params) {
    if (value) o.config.param_flags[name] = *value;
  }
  o.config.reducer = qnlp::corpus::parse_reducer(o.reducer);
  o.config.lemmatize = !o.no_lemmatize;
}

template <typename F>
void with_output(const RunConfig& config, F&& body) {
  if (!config.out_path) {
    body(std::cout);
    return;
  }
  std::ofstream out(*config.out_path);
  if (!out) throw qnlp::Error("cannot write " + *config.out_path);
  body(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum-simulated meaning-space toolkit"};
  app.require_subcommand(1);
  Options o;

  auto* prepare = app.add_subcommand("prepare", "Build a corpus model");
  prepare->add_option("--corpus", o.config.corpus_path, "Corpus text file")
      ->required();
  prepare->add_flag("--pre-tagged", o.config.pre_tagged,
                    "Corpus holds token<TAB>tag lines");
  prepare->add_flag("--no-lemmatize", o.no_lemmatize,
                    "Keep inflected forms in the builtin tagger");
  prepare->add_option("--fixture", o.config.fixture_path,
                      "JSON fixture overriding bases and projections");
  prepare->add_option("--out", o.config.out_path, "Model file to write")
      ->required();
  prepare->add_option("--patterns-out", o.config.patterns_out_path,
                      "Also write the pattern set in the bypass format");
  add_param_flags(prepare, o);

  auto* represent = app.add_subcommand(
      "represent", "Hamming-weighted distribution for test patterns");
  add_memory_flags(represent, o);
  represent->add_option("--test", o.config.tests,
                        "Bit-string or subject,verb,object")
      ->required();
  represent->add_option("--shots", o.shots_given, "Samples per test (50000)");

  auto* overlap = app.add_subcommand(
      "overlap", "Rank candidates by overlap with the first test");
  add_memory_flags(overlap, o);
  overlap->add_option("--test", o.config.tests,
                      "Reference first, then candidates")
      ->required();
  overlap->add_option("--candidates", o.config.candidates_path,
                      "Pattern-set file of further candidates");
  overlap->add_option("--shots", o.shots_given,
                      "Use a sampled SWAP test with this many shots");

  auto* gates = app.add_subcommand("report-gates",
                                   "Encode a memory and print its gate tally");
  add_memory_flags(gates, o);

  CLI11_PARSE(app, argc, argv);

  try {
    finalize(o);
    o.config.shots = o.shots_given;
    if (prepare->parsed()) {
      o.config.command = Command::kPrepare;
      qnlp::workflow::cmd_prepare(o.config, std::cout);
    } else if (represent->parsed()) {
      o.config.command = Command::kRepresent;
      with_output(o.config, [&](std::ostream& out) {
        qnlp::workflow::cmd_represent(o.config, out);
      });
    } else if (overlap->parsed()) {
      o.config.command = Command::kOverlap;
      with_output(o.config, [&](std::ostream& out) {
        qnlp::workflow::cmd_overlap(o.config, out);
      });
    } else if (gates->parsed()) {
      o.config.command = Command::kReportGates;
      with_output(o.config, [&](std::ostream& out) {
        qnlp::workflow::cmd_report_gates(o.config, out);
      });
    }
  } catch (const qnlp::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
