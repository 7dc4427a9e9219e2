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

#include <cmath>

namespace qnlp::tolerance {

// Allowed drift of the state norm and of "exactly reset" registers.
inline constexpr double kNorm = 1e-10;

// Post-selection below this probability is treated as impossible.
inline constexpr double kZeroProbability = 1e-12;

// Values closer than this rank as equal when ordering output rows.
inline constexpr double kRankResolution = 1e-12;

}  // namespace qnlp::tolerance

namespace qnlp {

// Sort key that merges values within tolerance::kRankResolution, so rows
// that are equal up to summation order fall back to a secondary key.
inline long long rank_key(double v) {
  return std::llround(v / tolerance::kRankResolution);
}

}  // namespace qnlp
