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

#include "qnlp/workflow/commands.h"

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

#include "qnlp/common/errors.h"
#include "qnlp/corpus/model_io.h"
#include "qnlp/corpus/tagger.h"
#include "qnlp/encoder/superposition_encoder.h"
#include "qnlp/hamming/hamming_representer.h"
#include "qnlp/overlap/overlap_estimator.h"
#include "qnlp/workflow/csv.h"

namespace qnlp::workflow {
namespace {

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool is_bit_string(const std::string& s) {
  return !s.empty() && s.find_first_not_of("01") == std::string::npos;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_triple(const std::string& text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    parts.push_back(trim(std::string_view(text).substr(
        start, comma == std::string::npos ? std::string::npos
                                          : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return parts;
}

std::optional<corpus::MeaningSpaceFixture> load_fixture_if(
    const RunConfig& config) {
  if (!config.fixture_path) return std::nullopt;
  return corpus::load_fixture(*config.fixture_path);
}

std::string describe(const Pattern& p, const MemorySource& memory) {
  const std::string label = label_for(p, memory);
  return label.empty() ? p.to_string() : p.to_string() + " " + label;
}

void add_memory_lines(std::vector<std::string>& header,
                      const MemorySource& memory) {
  header.push_back("memory: " + memory.description + " (" +
                   std::to_string(memory.patterns.size()) +
                   " patterns, width " +
                   std::to_string(memory.patterns.width()) + ")");
  if (const auto& p = memory.model_params) {
    header.push_back(
        std::string("model parameters: ") + kEnvNumBasisNoun + "=" +
        std::to_string(p->n_nouns) + " " + kEnvNumBasisVerb + "=" +
        std::to_string(p->n_verbs) + " " + kEnvNounCutoff + "=" +
        format_double(p->w_nouns) + " " + kEnvVerbCutoff + "=" +
        format_double(p->w_verbs) + " " + kEnvVerbNounCutoff + "=" +
        format_double(p->w_vn) + " reducer=" +
        std::string(corpus::reducer_name(p->reducer)));
  }
}

EncodeOptions encode_options(const RunConfig& config) {
  EncodeOptions opts;
  opts.synthesis = config.decomposed ? qsim::Synthesis::kDecomposed
                                     : qsim::Synthesis::kNative;
  return opts;
}

}  // namespace

MemorySource load_memory(const RunConfig& config) {
  MemorySource src;
  if (config.model_path) {
    corpus::CorpusModel model = corpus::load_model(*config.model_path);
    std::vector<std::string> labels;
    for (const Pattern& p : model.patterns) {
      labels.push_back(model.space.label(p));
    }
    src.patterns = PatternSet(model.patterns, std::move(labels));
    src.space = std::move(model.space);
    src.model_params = model.params;
    src.description = "model " + *config.model_path;
  } else if (config.patterns_path) {
    src.patterns = PatternSet::read_file(*config.patterns_path);
    src.description = "patterns " + *config.patterns_path;
    if (auto fixture = load_fixture_if(config)) {
      src.space = corpus::space_from_fixture(*fixture);
    }
  } else {
    throw InvalidArgument("no memory source given");
  }
  if (src.patterns.empty()) {
    throw InvalidArgument("the " + src.description + " holds no patterns");
  }
  if (src.space && src.space->width() != src.patterns.width()) {
    throw InvalidArgument("meaning space width " +
                          std::to_string(src.space->width()) +
                          " differs from the pattern width " +
                          std::to_string(src.patterns.width()));
  }
  return src;
}

Pattern resolve_test(const std::string& text, const MemorySource& memory) {
  const unsigned width = memory.patterns.width();
  if (is_bit_string(text)) {
    if (text.size() != width) {
      throw InvalidArgument("test pattern " + text + " has width " +
                            std::to_string(text.size()) + ", memory width is " +
                            std::to_string(width));
    }
    return Pattern::parse(text);
  }
  const std::vector<std::string> parts = split_triple(text);
  if (parts.size() == 3 && memory.space) {
    return memory.space->compose(parts[0], parts[1], parts[2]);
  }
  const std::string wanted = parts.size() == 3
                                 ? parts[0] + "," + parts[1] + "," + parts[2]
                                 : text;
  for (std::size_t i = 0; i < memory.patterns.size(); ++i) {
    if (memory.patterns.label(i) == wanted) return memory.patterns[i];
  }
  std::string known;
  for (std::size_t i = 0; i < memory.patterns.size() && i < 8; ++i) {
    if (memory.patterns.label(i).empty()) continue;
    known += (known.empty() ? "" : "; ") + memory.patterns.label(i);
  }
  throw ResolutionError(
      "cannot resolve test \"" + text + "\"" +
      (memory.space ? std::string(": expected subject,verb,object")
                    : std::string(": no meaning space loaded (use --model "
                                  "or --fixture)")) +
      (known.empty() ? std::string() : "; labelled patterns include " + known));
}

std::string label_for(const Pattern& p, const MemorySource& memory) {
  for (std::size_t i = 0; i < memory.patterns.size(); ++i) {
    if (memory.patterns[i] == p && !memory.patterns.label(i).empty()) {
      return memory.patterns.label(i);
    }
  }
  return memory.space ? memory.space->label(p) : std::string();
}

std::vector<std::string> header_lines(const RunConfig& config,
                                      const ResolvedParams& params) {
  std::vector<std::string> lines;
  lines.push_back("qnlp " + std::string(kToolVersion) + " csv v" +
                  std::to_string(kCsvVersion));
  lines.push_back("command: " + std::string(command_name(config.command)));
  for (const ParamRecord& r : params.records) {
    lines.push_back(r.name + "=" + format_double(r.value) +
                    " source=" + r.source +
                    " env=" + r.env.value_or("unset") +
                    " flag=" + r.flag.value_or("unset"));
  }
  lines.push_back("reducer: " +
                  std::string(corpus::reducer_name(params.params.reducer)));
  return lines;
}

corpus::CorpusModel cmd_prepare(const RunConfig& config, std::ostream& log) {
  config.validate();
  const auto fixture = load_fixture_if(config);
  const ResolvedParams params = resolve_params(
      config.env, config.param_flags,
      fixture ? fixture->params : std::map<std::string, double>{},
      config.reducer);

  const std::string text = read_text(*config.corpus_path);
  corpus::TaggerOptions topts;
  topts.lemmatize = config.lemmatize;
  const auto mode = config.pre_tagged ? corpus::TaggerMode::kPreTagged
                                      : corpus::TaggerMode::kBuiltin;
  auto occurrences = corpus::tokenize_and_tag(
      config.pre_tagged ? std::string_view(text)
                        : corpus::strip_gutenberg_boilerplate(text),
      mode, topts);
  corpus::CorpusModel model = corpus::build_model(
      std::move(occurrences), params.params, fixture ? &*fixture : nullptr);

  for (const std::string& line : header_lines(config, params)) {
    log << "# " << line << '\n';
  }
  auto print_basis = [&](const char* name, const corpus::BasisSet& b) {
    log << name << " basis (width " << b.width() << "):";
    for (std::size_t i = 0; i < b.size(); ++i) {
      log << ' ' << b.tokens()[i] << '=' << b.code()[i].to_string();
    }
    log << '\n';
  };
  print_basis("subject", model.space.subject);
  print_basis("verb", model.space.verb);
  print_basis("object", model.space.object);
  if (model.noun_basis_short) log << "warning: fewer nouns than requested\n";
  if (model.verb_basis_short) log << "warning: fewer verbs than requested\n";
  log << "sentences: " << model.sentences.size() << '\n';
  log << "patterns: " << model.patterns.size() << " (width "
      << model.space.width() << ")\n";

  if (model.patterns.empty()) {
    throw Error(
        "no noun-verb-noun sentence survived: check the verb-noun cutoff (" +
        std::string(kEnvVerbNounCutoff) + ") and that basis tokens occur");
  }
  corpus::save_model(*config.out_path, model);
  if (config.patterns_out_path) {
    std::vector<std::string> labels;
    for (const Pattern& p : model.patterns) {
      labels.push_back(model.space.label(p));
    }
    std::ofstream out(*config.patterns_out_path);
    if (!out) throw Error("cannot write " + *config.patterns_out_path);
    PatternSet(model.patterns, std::move(labels)).write(out);
  }
  return model;
}

void cmd_represent(const RunConfig& config, std::ostream& out) {
  config.validate();
  const ResolvedParams params =
      resolve_params(config.env, config.param_flags, {}, config.reducer);
  const MemorySource memory = load_memory(config);
  std::vector<Pattern> tests;
  for (const std::string& text : config.tests) {
    tests.push_back(resolve_test(text, memory));
  }
  const EncodedMemory encoded = encode(memory.patterns, encode_options(config));
  const SamplingRequest sampling{config.shots.value_or(kDefaultShots),
                                 config.seed};
  for (const Pattern& x : tests) {
    const WeightedDistribution d = represent(encoded, x, sampling);
    std::vector<std::string> header = header_lines(config, params);
    add_memory_lines(header, memory);
    header.push_back("test: " + describe(x, memory));
    header.push_back("shots: " + std::to_string(d.shots));
    header.push_back("seed: " + std::to_string(d.seed));
    header.push_back("success_probability: " +
                     format_double(d.success_probability));
    write_distribution_csv(out, d, header);
  }
}

void cmd_overlap(const RunConfig& config, std::ostream& out) {
  config.validate();
  const ResolvedParams params =
      resolve_params(config.env, config.param_flags, {}, config.reducer);
  const MemorySource memory = load_memory(config);
  const Pattern reference = resolve_test(config.tests.front(), memory);

  std::vector<Pattern> candidates;
  std::vector<std::string> labels;
  for (std::size_t i = 1; i < config.tests.size(); ++i) {
    const Pattern p = resolve_test(config.tests[i], memory);
    candidates.push_back(p);
    const std::string label = label_for(p, memory);
    labels.push_back(label.empty() ? config.tests[i] : label);
  }
  if (config.candidates_path) {
    const PatternSet file = PatternSet::read_file(*config.candidates_path);
    for (std::size_t i = 0; i < file.size(); ++i) {
      candidates.push_back(file[i]);
      labels.push_back(file.label(i).empty() ? label_for(file[i], memory)
                                             : file.label(i));
    }
  }
  const PatternSet candidate_set(std::move(candidates), std::move(labels));
  const std::uint64_t shots = config.shots.value_or(0);
  const auto rows =
      rank_overlaps(memory.patterns, reference, candidate_set, shots,
                    config.seed);

  std::vector<std::string> header = header_lines(config, params);
  add_memory_lines(header, memory);
  header.push_back("reference: " + describe(reference, memory));
  header.push_back(std::string("method: ") +
                   (shots == 0 ? "analytic" : "swap-test"));
  if (shots != 0) {
    header.push_back("shots: " + std::to_string(shots));
    header.push_back("seed: " + std::to_string(config.seed));
  }
  write_overlap_csv(out, rows, header);
}

void cmd_report_gates(const RunConfig& config, std::ostream& out) {
  RunConfig relaxed = config;
  relaxed.command = Command::kReportGates;
  relaxed.validate();
  const MemorySource memory = load_memory(config);
  const EncodedMemory encoded = encode(memory.patterns, encode_options(config));
  out << "patterns: " << memory.patterns.size() << '\n'
      << "width: " << memory.patterns.width() << '\n'
      << "qubits: " << encoded.simulator.layout().num_qubits() << '\n'
      << "synthesis: " << (config.decomposed ? "decomposed" : "native")
      << '\n'
      << encoded.gate_report.report();
}

}  // namespace qnlp::workflow
