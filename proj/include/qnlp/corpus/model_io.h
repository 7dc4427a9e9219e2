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
#include <string>

#include "qnlp/corpus/corpus_model.h"

namespace qnlp::corpus {

inline constexpr int kModelFormatVersion = 1;

// JSON document holding the parameters, occurrences, bases with codes,
// projection maps, sentences and patterns.
void write_model(std::ostream& out, const CorpusModel& model);
// Throws ParseError on malformed JSON or an unsupported format_version.
CorpusModel read_model(std::istream& in);
void save_model(const std::string& path, const CorpusModel& model);
CorpusModel load_model(const std::string& path);

// {"bases": {"subject": {"tokens": [...], "width": 2}, ...},
//  "projections": {"subject": {"john": ["adult", "smith"]}, ...}}
// Every key is optional.
MeaningSpaceFixture read_fixture(std::istream& in);
MeaningSpaceFixture load_fixture(const std::string& path);

}  // namespace qnlp::corpus
