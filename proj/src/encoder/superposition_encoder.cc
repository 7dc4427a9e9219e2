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
#include "qnlp/encoder/superposition_encoder.h"

#include <cmath>
#include <string>
#include <vector>

#include "qnlp/common/errors.h"

namespace qnlp {

using qsim::Control;
using qsim::Matrix2;

MemoryRegisters MemoryRegisters::from_layout(
    const qsim::RegisterLayout& layout) {
  return {layout.at(qsim::kMemoryRegister), layout.at(qsim::kControlRegister),
          layout.at(qsim::kAuxRegister)};
}

Matrix2 carve_matrix(std::size_t i) {
  if (i == 0) throw InvalidArgument("carve matrix index must be >= 1");
  const double d = static_cast<double>(i);
  const double keep = std::sqrt((d - 1.0) / d);
  const double give = 1.0 / std::sqrt(d);
  return {{keep, give, -give, keep}};
}

void encode_into(qsim::Simulator& sim, const MemoryRegisters& regs,
                 const PatternSet& patterns, const EncodeOptions& options) {
  if (patterns.empty()) throw InvalidArgument("cannot encode an empty pattern set");
  const std::size_t n = patterns.width();
  if (regs.memory.width != n || regs.aux.width != n || regs.control.width != 2) {
    throw InvalidArgument("registers do not match pattern width " +
                          std::to_string(n));
  }
  const std::size_t total = patterns.size();
  const std::size_t u1 = regs.u1();
  const std::size_t u2 = regs.u2();
  const std::vector<std::size_t> memory = regs.memory.qubits();
  const std::vector<std::size_t> scratch = regs.aux.qubits();

  // Active branch is marked by u = |01> (u2 set).
  sim.x(u2);

  for (std::size_t it = 0; it < total; ++it) {
    const Pattern& p = patterns[it];
    auto load_aux = [&] {
      for (std::size_t j = 0; j < n; ++j) {
        if (p.bit(static_cast<unsigned>(j))) sim.x(regs.aux[j]);
      }
    };
    auto copy_into_active = [&](bool reverse) {
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t j = reverse ? n - 1 - k : k;
        const Control ctl[2] = {{regs.aux[j], true}, {u2, true}};
        sim.controlled_u(ctl, regs.memory[j], Matrix2::pauli_x());
      }
    };

    load_aux();
    copy_into_active(false);
    // m_j <- NOT(m_j XOR a_j): all ones exactly on the branch holding p.
    for (std::size_t j = 0; j < n; ++j) {
      sim.cx(regs.aux[j], regs.memory[j]);
      sim.x(regs.memory[j]);
    }
    sim.ncx(memory, u1, scratch);

    const Control carve_ctl{u1, true};
    sim.controlled_u({&carve_ctl, 1}, u2, carve_matrix(total - it));

    sim.ncx(memory, u1, scratch);
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t j = n - 1 - k;
      sim.x(regs.memory[j]);
      sim.cx(regs.aux[j], regs.memory[j]);
    }
    copy_into_active(true);
    load_aux();

    if (options.check_progress) {
      const double active = sim.state().probability(u2, 1);
      const double expected =
          static_cast<double>(total - it - 1) / static_cast<double>(total);
      if (std::abs(active - expected) > 1e-9) {
        throw Error("encoder drift after pattern " + std::to_string(it + 1) +
                    ": active branch holds " + std::to_string(active) +
                    ", expected " + std::to_string(expected));
      }
    }
  }
}

EncodedMemory encode(const PatternSet& patterns, const EncodeOptions& options) {
  if (patterns.empty()) throw InvalidArgument("cannot encode an empty pattern set");
  qsim::Simulator sim(qsim::RegisterLayout::memory_layout(patterns.width()),
                      options.synthesis);
  const MemoryRegisters regs = MemoryRegisters::from_layout(sim.layout());
  encode_into(sim, regs, patterns, options);
  const qsim::GateCounter report = sim.counter();
  return EncodedMemory{std::move(sim), patterns, regs, report};
}

}  // namespace qnlp
