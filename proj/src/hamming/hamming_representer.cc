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
#include "qnlp/hamming/hamming_representer.h"

#include <cmath>
#include <numbers>
#include <string>

#include "qnlp/common/errors.h"
#include "qnlp/common/tolerances.h"

namespace qnlp {

using qsim::Control;

namespace {

void check_width(const MemoryRegisters& regs, const Pattern& x) {
  if (x.width() != regs.memory.width) {
    throw InvalidArgument("test pattern " + x.to_string() + " has width " +
                          std::to_string(x.width()) + ", memory width is " +
                          std::to_string(regs.memory.width));
  }
}

}  // namespace

void load_test_pattern(qsim::Simulator& sim, const MemoryRegisters& regs,
                       const Pattern& x) {
  check_width(regs, x);
  for (std::size_t q : regs.aux.qubits()) {
    if (sim.state().probability(q, 1) > tolerance::kNorm) {
      throw InvalidArgument("auxiliary register is not zeroed");
    }
  }
  for (std::size_t q : regs.control.qubits()) {
    if (sim.state().probability(q, 1) > tolerance::kNorm) {
      throw InvalidArgument("control register is not zeroed");
    }
  }
  for (unsigned j = 0; j < x.width(); ++j) {
    if (x.bit(j)) sim.x(regs.aux[j]);
  }
}

void apply_distance_rotations(qsim::Simulator& sim,
                              const MemoryRegisters& regs) {
  const std::size_t n = regs.memory.width;
  const double theta = std::numbers::pi / static_cast<double>(n);
  const qsim::Matrix2 rot = qsim::Matrix2::ry(theta);
  for (std::size_t j = 0; j < n; ++j) {
    const Control ctl[2] = {{regs.aux[j], true}, {regs.memory[j], true}};
    sim.controlled_u(ctl, regs.u1(), rot);
    sim.x(regs.aux[j]);
    sim.x(regs.memory[j]);
    sim.controlled_u(ctl, regs.u1(), rot);
    sim.x(regs.aux[j]);
    sim.x(regs.memory[j]);
  }
}

double post_select_and_reset(qsim::Simulator& sim, const MemoryRegisters& regs,
                             const Pattern& x) {
  check_width(regs, x);
  double p = 0.0;
  try {
    p = sim.post_select(regs.u1(), 1);
  } catch (const ZeroNormError& e) {
    throw ZeroNormError("test pattern " + x.to_string() +
                            " is orthogonal to every stored pattern",
                        e.probability());
  }
  for (unsigned j = 0; j < x.width(); ++j) {
    if (x.bit(j)) sim.x(regs.aux[j]);
  }
  return p;
}

WeightedDistribution read_distribution(const qsim::Simulator& sim,
                                       const MemoryRegisters& regs,
                                       const PatternSet& patterns,
                                       const Pattern& x,
                                       double success_probability) {
  check_width(regs, x);
  const std::vector<double> marginal =
      sim.state().marginal(regs.memory.offset, regs.memory.width);
  WeightedDistribution out;
  out.test = x;
  out.success_probability = success_probability;
  double stored = 0.0;
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    const Pattern& p = patterns[i];
    const double prob = marginal[p.value()];
    stored += prob;
    out.entries.push_back(
        {p, patterns.label(i), hamming_distance(p, x), prob, 0});
  }
  if (std::abs(stored - 1.0) > 1e-9) {
    throw Error("memory register leaked " + std::to_string(1.0 - stored) +
                " probability outside the stored patterns");
  }
  return out;
}

WeightedDistribution represent_in_place(EncodedMemory& memory, const Pattern& x,
                                        std::optional<SamplingRequest> sampling) {
  qsim::Simulator& sim = memory.simulator;
  const MemoryRegisters& regs = memory.registers;
  load_test_pattern(sim, regs, x);
  apply_distance_rotations(sim, regs);
  const double p = post_select_and_reset(sim, regs, x);
  WeightedDistribution out =
      read_distribution(sim, regs, memory.patterns, x, p);
  if (sampling) {
    const qsim::Histogram counts =
        sim.sample(regs.memory, sampling->shots, sampling->seed);
    for (auto& e : out.entries) {
      auto it = counts.find(e.pattern.value());
      if (it != counts.end()) e.count = it->second;
    }
    out.shots = sampling->shots;
    out.seed = sampling->seed;
  }
  return out;
}

WeightedDistribution represent(const EncodedMemory& memory, const Pattern& x,
                               std::optional<SamplingRequest> sampling) {
  EncodedMemory copy = memory;
  return represent_in_place(copy, x, sampling);
}

}  // namespace qnlp
