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
#include <optional>
#include <string>
#include <vector>

#include "qnlp/common/pattern.h"
#include "qnlp/encoder/superposition_encoder.h"
#include "qnlp/qsim/simulator.h"

namespace qnlp {

struct WeightedEntry {
  Pattern pattern;
  std::string label;
  int distance = 0;           // Hamming distance to the test pattern
  double probability = 0.0;   // post-selected probability of this pattern
  std::uint64_t count = 0;    // sampled count, 0 when not sampled
};

// Distribution over the stored patterns after Hamming weighting.
struct WeightedDistribution {
  Pattern test;
  std::vector<WeightedEntry> entries;  // in PatternSet order
  double success_probability = 0.0;    // <P> before post-selection
  std::uint64_t shots = 0;             // 0 when not sampled
  std::uint64_t seed = 0;
};

struct SamplingRequest {
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
};

// Writes x into the auxiliary register with one X per set bit. Requires a
// and u to be zero (checked on the state).
void load_test_pattern(qsim::Simulator& sim, const MemoryRegisters& regs,
                       const Pattern& x);

// For every j: a doubly-controlled Ry(pi/n) on u1 when a_j = m_j = 1, then
// the same after flipping a_j and m_j (so it fires when both were 0), then
// flip back. Each matching bit adds pi/n to the u1 rotation angle, so u1 is
// |1> with amplitude sin((n - d) pi / 2n) = cos(d pi / 2n).
void apply_distance_rotations(qsim::Simulator& sim, const MemoryRegisters& regs);

// Post-selects u1 = 1 and clears the test pattern from a. Returns <P>.
// Throws ZeroNormError when every stored pattern is the complement of x.
double post_select_and_reset(qsim::Simulator& sim, const MemoryRegisters& regs,
                             const Pattern& x);

// Reads the post-selected m register distribution over the stored patterns.
// Throws Error if probability leaked outside the stored set.
WeightedDistribution read_distribution(const qsim::Simulator& sim,
                                       const MemoryRegisters& regs,
                                       const PatternSet& patterns,
                                       const Pattern& x,
                                       double success_probability);

// Full pipeline on a copy of the encoded memory. The memory itself is left
// untouched so one encoding can serve several test patterns.
WeightedDistribution represent(const EncodedMemory& memory, const Pattern& x,
                               std::optional<SamplingRequest> sampling = {});

// In-place variant that consumes the memory's state.
WeightedDistribution represent_in_place(EncodedMemory& memory, const Pattern& x,
                                        std::optional<SamplingRequest> sampling = {});

}  // namespace qnlp
