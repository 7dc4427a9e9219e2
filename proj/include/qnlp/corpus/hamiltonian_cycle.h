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

#include <cstddef>
#include <vector>

namespace qnlp::corpus {

using DistanceMatrix = std::vector<std::vector<double>>;

inline constexpr std::size_t kMinCycleSize = 3;
inline constexpr std::size_t kMaxCycleSize = 16;

// Total weight of the closed tour visiting `order` and returning to its start.
double cycle_weight(const DistanceMatrix& weights,
                    const std::vector<std::size_t>& order);

// Minimum-weight Hamiltonian cycle by Held-Karp dynamic programming.
// Among optimal tours from `start` the lexicographically smallest is taken,
// then reversed if its last vertex is strictly closer to `start` than its
// second, so the cheaper neighbour of `start` comes second.
// Throws CapacityError outside [kMinCycleSize, kMaxCycleSize] and
// InvalidArgument for a non-square, asymmetric or non-finite matrix.
std::vector<std::size_t> min_hamiltonian_cycle(const DistanceMatrix& weights,
                                               std::size_t start = 0);

}  // namespace qnlp::corpus
