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
#include "qnlp/qsim/sampling.h"

#include <algorithm>
#include <random>

#include "qnlp/common/errors.h"

namespace qnlp::qsim {

std::vector<std::uint64_t> sample_counts(std::span<const double> weights,
                                         std::uint64_t shots,
                                         std::uint64_t seed) {
  if (shots == 0) throw InvalidArgument("shots must be >= 1");
  if (weights.empty()) throw InvalidArgument("empty distribution");
  std::vector<double> cdf(weights.size());
  double total = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!(weights[i] >= 0.0)) {
      throw InvalidArgument("distribution weights must be non-negative");
    }
    total += weights[i];
    cdf[i] = total;
  }
  if (!(total > 0.0)) throw InvalidArgument("distribution has zero mass");

  std::size_t last_positive = weights.size() - 1;
  while (weights[last_positive] == 0.0) --last_positive;

  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> counts(weights.size(), 0);
  for (std::uint64_t s = 0; s < shots; ++s) {
    // 53 random mantissa bits -> uniform in [0, 1).
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * total;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    // u can round up to total; the last entry with mass owns that edge.
    const std::size_t index = it == cdf.end()
                                  ? last_positive
                                  : static_cast<std::size_t>(it - cdf.begin());
    ++counts[index];
  }
  return counts;
}

}  // namespace qnlp::qsim
