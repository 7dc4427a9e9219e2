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
#include "qnlp/overlap/overlap_estimator.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qnlp/common/errors.h"
#include "qnlp/common/tolerances.h"
#include "qnlp/hamming/hamming_representer.h"
#include "qnlp/qsim/sampling.h"

namespace qnlp {

double distance_weight(int distance, unsigned width) {
  return std::cos(distance * std::numbers::pi / (2.0 * width));
}

OverlapResult analytic_overlap(const PatternSet& memory, const Pattern& x0,
                               const Pattern& x1) {
  if (memory.empty()) throw InvalidArgument("empty memory");
  if (x0.width() != memory.width() || x1.width() != memory.width()) {
    throw InvalidArgument("test patterns must match the memory width " +
                          std::to_string(memory.width()));
  }
  double cross = 0.0, norm0 = 0.0, norm1 = 0.0;
  for (const Pattern& p : memory.patterns()) {
    const double w0 = distance_weight(hamming_distance(p, x0), p.width());
    const double w1 = distance_weight(hamming_distance(p, x1), p.width());
    cross += w0 * w1;
    norm0 += w0 * w0;
    norm1 += w1 * w1;
  }
  const double k = static_cast<double>(memory.size());
  for (const auto& [norm, x] : {std::pair{norm0, x0}, std::pair{norm1, x1}}) {
    if (norm / k < tolerance::kZeroProbability) {
      throw ZeroNormError("test pattern " + x.to_string() +
                              " is orthogonal to every stored pattern",
                          norm / k);
    }
  }
  OverlapResult out;
  out.overlap = std::min(1.0, cross / std::sqrt(norm0 * norm1));
  out.fidelity = out.overlap * out.overlap;
  out.method = OverlapMethod::kAnalytic;
  return out;
}

OverlapResult swap_test_overlap(const PatternSet& memory, const Pattern& x0,
                                const Pattern& x1, std::uint64_t shots,
                                std::uint64_t seed,
                                const EncodeOptions& options) {
  if (shots == 0) throw InvalidArgument("SWAP test needs shots >= 1");
  if (memory.empty()) throw InvalidArgument("empty memory");
  const std::size_t n = memory.width();
  if (3 * n + 3 > qsim::kMaxQubits) {
    throw CapacityError("SWAP test on " + std::to_string(n) +
                        "-bit patterns needs " + std::to_string(3 * n + 3) +
                        " qubits; the simulator holds at most " +
                        std::to_string(qsim::kMaxQubits));
  }
  qsim::RegisterLayout layout;
  const qsim::Register m0 = layout.add("m", n);
  const qsim::Register m1 = layout.add("m'", n);
  const qsim::Register u = layout.add(qsim::kControlRegister, 2);
  const qsim::Register a = layout.add(qsim::kAuxRegister, n);
  const qsim::Register anc = layout.add("anc", 1);
  qsim::Simulator sim(layout, options.synthesis);

  const Pattern tests[2] = {x0, x1};
  const qsim::Register memories[2] = {m0, m1};
  for (int side = 0; side < 2; ++side) {
    const MemoryRegisters regs{memories[side], u, a};
    encode_into(sim, regs, memory, options);
    load_test_pattern(sim, regs, tests[side]);
    apply_distance_rotations(sim, regs);
    post_select_and_reset(sim, regs, tests[side]);
    // u1 is |1> with certainty after post-selection.
    sim.x(regs.u1());
  }

  sim.h(anc[0]);
  for (std::size_t j = 0; j < n; ++j) sim.cswap(anc[0], m0[j], m1[j]);
  sim.h(anc[0]);

  OverlapResult out;
  out.method = OverlapMethod::kSwapTest;
  out.shots = shots;
  out.seed = seed;
  out.ancilla_zero_probability = sim.state().probability(anc[0], 0);
  const qsim::Histogram counts = sim.sample(anc, shots, seed);
  const auto zero = counts.find(0);
  const double zeros = zero == counts.end() ? 0.0 : static_cast<double>(zero->second);
  out.ancilla_zero_estimate = zeros / static_cast<double>(shots);
  out.fidelity = 2.0 * out.ancilla_zero_estimate - 1.0;
  out.overlap = std::sqrt(std::max(0.0, out.fidelity));
  return out;
}

std::vector<RankedOverlap> rank_overlaps(const PatternSet& memory,
                                         const Pattern& x,
                                         const PatternSet& candidates,
                                         std::uint64_t shots,
                                         std::uint64_t seed) {
  std::vector<RankedOverlap> out;
  out.reserve(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const Pattern& c = candidates[i];
    OverlapResult r = shots == 0
                          ? analytic_overlap(memory, x, c)
                          : swap_test_overlap(memory, x, c, shots, seed + i);
    out.push_back({candidates.label(i), c, r});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const RankedOverlap& a, const RankedOverlap& b) {
                     const auto ka = rank_key(a.result.overlap);
                     const auto kb = rank_key(b.result.overlap);
                     if (ka != kb) return ka > kb;
                     return a.pattern.value() < b.pattern.value();
                   });
  return out;
}

}  // namespace qnlp
