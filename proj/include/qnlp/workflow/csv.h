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
#include <string_view>
#include <vector>

#include "qnlp/hamming/hamming_representer.h"
#include "qnlp/overlap/overlap_estimator.h"

namespace qnlp::workflow {

inline constexpr int kCsvVersion = 1;

// Quotes a field when it holds a comma, quote or newline.
std::string csv_field(std::string_view text);

// Writes each line prefixed with "# ".
void write_header(std::ostream& out, const std::vector<std::string>& lines);

// label,pattern,hamming_distance,probability,count; rows by decreasing
// probability, ties by pattern value.
void write_distribution_csv(std::ostream& out, const WeightedDistribution& d,
                            const std::vector<std::string>& header);

// label,pattern,overlap,fidelity; rows in the given order.
void write_overlap_csv(std::ostream& out,
                       const std::vector<RankedOverlap>& rows,
                       const std::vector<std::string>& header);

// Shortest round-trip decimal form of v.
std::string format_double(double v);

}  // namespace qnlp::workflow
