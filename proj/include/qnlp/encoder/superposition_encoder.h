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

#include "qnlp/encoder/pattern_set.h"
#include "qnlp/qsim/gate_counter.h"
#include "qnlp/qsim/matrix2.h"
#include "qnlp/qsim/register_layout.h"
#include "qnlp/qsim/simulator.h"

namespace qnlp {

// The three registers the memory circuits act on: memory m (n qubits),
// control u (2 qubits, u[0] = u1, u[1] = u2) and auxiliary a (n qubits).
struct MemoryRegisters {
  qsim::Register memory;
  qsim::Register control;
  qsim::Register aux;

  std::size_t u1() const { return control[0]; }
  std::size_t u2() const { return control[1]; }

  // Looks up the "m", "u" and "a" registers.
  static MemoryRegisters from_layout(const qsim::RegisterLayout& layout);
};

// S(i) = [[sqrt((i-1)/i), 1/sqrt(i)], [-1/sqrt(i), sqrt((i-1)/i)]]
//      = Ry(-acos((i-2)/i)). Throws InvalidArgument for i == 0.
qsim::Matrix2 carve_matrix(std::size_t i);

struct EncodeOptions {
  qsim::Synthesis synthesis = qsim::Synthesis::kNative;
  // After each pattern, assert that the active branch holds (N - i)/N of
  // the probability mass.
  bool check_progress = true;
};

// Result of loading a PatternSet: m holds the equal superposition of the
// patterns, u and a are back to |0>.
struct EncodedMemory {
  qsim::Simulator simulator;
  PatternSet patterns;
  MemoryRegisters registers;
  qsim::GateCounter gate_report;
};

// Builds the 2n + 2 qubit memory layout and encodes patterns into it.
// Throws InvalidArgument for an empty set.
EncodedMemory encode(const PatternSet& patterns, const EncodeOptions& options = {});

// Encodes into existing registers. Requires m, u and a to be |0>.
void encode_into(qsim::Simulator& sim, const MemoryRegisters& regs,
                 const PatternSet& patterns, const EncodeOptions& options = {});

}  // namespace qnlp
