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

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qnlp/common/pattern.h"
#include "qnlp/corpus/corpus_model.h"
#include "qnlp/encoder/pattern_set.h"
#include "qnlp/workflow/run_config.h"

namespace qnlp::workflow {

inline constexpr const char* kToolVersion = "0.1.0";

// Patterns to encode plus, when known, the meaning space that labels them.
struct MemorySource {
  PatternSet patterns;
  std::optional<corpus::MeaningSpace> space;
  // Parameters the model was prepared with (model sources only).
  std::optional<corpus::PreprocessParams> model_params;
  std::string description;
};

// Reads --patterns or --model. With --patterns, a --fixture that defines all
// three bases supplies the meaning space. Throws InvalidArgument when the
// memory is empty.
MemorySource load_memory(const RunConfig& config);

// A test given as a bit-string of the memory width, or as a
// "subject,verb,object" triple resolved through the meaning space (or,
// without one, through the pattern labels). Throws InvalidArgument on a
// width mismatch and ResolutionError on an unknown token or label.
Pattern resolve_test(const std::string& text, const MemorySource& memory);

// Label for p: the pattern-set label, else the meaning-space decoding.
std::string label_for(const Pattern& p, const MemorySource& memory);

// Common "# " header lines: version, command, parameters with their
// environment and flag values, and the run settings.
std::vector<std::string> header_lines(const RunConfig& config,
                                      const ResolvedParams& params);

// Builds and saves the corpus model; prints a summary to `log`. Throws
// Error when no sentence survives.
corpus::CorpusModel cmd_prepare(const RunConfig& config, std::ostream& log);

// One CSV section per test pattern. Samples config.shots draws (50000 when
// unset) with config.seed.
void cmd_represent(const RunConfig& config, std::ostream& out);

// Overlap of the first test against the remaining tests and the candidate
// file, ranked. Analytic unless config.shots is set.
void cmd_overlap(const RunConfig& config, std::ostream& out);

// Encodes the memory and prints its gate tally.
void cmd_report_gates(const RunConfig& config, std::ostream& out);

inline constexpr std::uint64_t kDefaultShots = 50000;

}  // namespace qnlp::workflow
