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
#include <string>
#include <vector>

#include "qnlp/common/pattern.h"
#include "qnlp/encoder/pattern_set.h"
#include "qnlp/encoder/superposition_encoder.h"

namespace qnlp {

enum class OverlapMethod { kAnalytic, kSwapTest };

struct OverlapResult {
  // Normalized inner product of the two Hamming-weighted memory states,
  // <psi_0|psi_1> in [0, 1] (the weights are non-negative).
  double overlap = 0.0;
  // overlap^2, the quantity a SWAP test estimates.
  double fidelity = 0.0;
  OverlapMethod method = OverlapMethod::kAnalytic;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  // SWAP test only: exact ancilla P(0) of the simulated state and the
  // sampled estimate.
  double ancilla_zero_probability = 0.0;
  double ancilla_zero_estimate = 0.0;
};

// Amplitude weight of a stored pattern at Hamming distance d, width n:
// cos(d * pi / (2n)).
double distance_weight(int distance, unsigned width);

// Closed-form overlap sum_j w0_j w1_j / sqrt(sum w0^2 * sum w1^2).
// Throws ZeroNormError if either test pattern is orthogonal to the memory.
OverlapResult analytic_overlap(const PatternSet& memory, const Pattern& x0,
                               const Pattern& x1);

// Prepares both weighted states on disjoint memory registers m and m'
// (sharing u and a, which are cleared between the runs), then runs an
// ancilla-controlled SWAP test and samples the ancilla. Needs 3n + 3 qubits.
OverlapResult swap_test_overlap(const PatternSet& memory, const Pattern& x0,
                                const Pattern& x1, std::uint64_t shots,
                                std::uint64_t seed,
                                const EncodeOptions& options = {});

struct RankedOverlap {
  std::string label;
  Pattern pattern;
  OverlapResult result;
};

// Overlap of x against every candidate, sorted by decreasing overlap (ties
// by pattern value). Analytic when shots == 0, SWAP test otherwise.
std::vector<RankedOverlap> rank_overlaps(const PatternSet& memory,
                                         const Pattern& x,
                                         const PatternSet& candidates,
                                         std::uint64_t shots = 0,
                                         std::uint64_t seed = 0);

}  // namespace qnlp
