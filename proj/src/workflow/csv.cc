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

#include "qnlp/workflow/csv.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <ostream>

#include "qnlp/common/tolerances.h"

namespace qnlp::workflow {

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n\r") == std::string_view::npos) {
    return std::string(text);
  }
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string format_double(double v) {
  std::array<char, 32> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ec == std::errc{} ? ptr : buf.data());
}

void write_header(std::ostream& out, const std::vector<std::string>& lines) {
  for (const std::string& line : lines) out << "# " << line << '\n';
}

void write_distribution_csv(std::ostream& out, const WeightedDistribution& d,
                            const std::vector<std::string>& header) {
  write_header(out, header);
  std::vector<const WeightedEntry*> rows;
  for (const WeightedEntry& e : d.entries) rows.push_back(&e);
  std::stable_sort(rows.begin(), rows.end(), [](const auto* a, const auto* b) {
    const auto ka = rank_key(a->probability);
    const auto kb = rank_key(b->probability);
    if (ka != kb) return ka > kb;
    return a->pattern.value() < b->pattern.value();
  });
  out << "label,pattern,hamming_distance,probability,count\n";
  for (const WeightedEntry* e : rows) {
    out << csv_field(e->label) << ',' << e->pattern.to_string() << ','
        << e->distance << ',' << format_double(e->probability) << ','
        << e->count << '\n';
  }
}

void write_overlap_csv(std::ostream& out,
                       const std::vector<RankedOverlap>& rows,
                       const std::vector<std::string>& header) {
  write_header(out, header);
  out << "label,pattern,overlap,fidelity\n";
  for (const RankedOverlap& r : rows) {
    out << csv_field(r.label) << ',' << r.pattern.to_string() << ','
        << format_double(r.result.overlap) << ','
        << format_double(r.result.fidelity) << '\n';
  }
}

}  // namespace qnlp::workflow
