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
#include <span>
#include <vector>

namespace qnlp::qsim {

// Draws shots i.i.d. outcomes from a discrete distribution by inverse CDF
// over a 64-bit Mersenne Twister. Weights need not be normalized. The
// result is identical on every platform for a given seed.
std::vector<std::uint64_t> sample_counts(std::span<const double> weights,
                                         std::uint64_t shots,
                                         std::uint64_t seed);

}  // namespace qnlp::qsim
