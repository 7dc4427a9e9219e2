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
#include <cstdint>
#include <map>
#include <span>

#include "qnlp/qsim/gate_counter.h"
#include "qnlp/qsim/matrix2.h"
#include "qnlp/qsim/register_layout.h"
#include "qnlp/qsim/state_vector.h"

namespace qnlp::qsim {

// How gates with more than one control reach the state vector.
enum class Synthesis {
  // One kernel call per gate; the counter is charged the decomposed cost.
  kNative,
  // The decomposition is executed gate by gate. Same tally, same state.
  kDecomposed,
};

// Counts per register value, keyed by the little-endian integer value.
using Histogram = std::map<std::uint64_t, std::uint64_t>;

// A state vector over a named layout plus a gate tally.
class Simulator {
 public:
  explicit Simulator(RegisterLayout layout,
                     Synthesis synthesis = Synthesis::kNative);

  const RegisterLayout& layout() const { return layout_; }
  const StateVector& state() const { return state_; }
  const GateCounter& counter() const { return counter_; }
  Synthesis synthesis() const { return synthesis_; }

  // Replaces the state (same qubit count); the tally is kept.
  void set_state(StateVector state);

  void x(std::size_t qubit);
  void ry(std::size_t qubit, double theta);
  void h(std::size_t qubit);
  void apply_1q(std::size_t qubit, const Matrix2& u);

  void cx(std::size_t control, std::size_t target);
  // u on target where every control matches its polarity.
  void controlled_u(std::span<const Control> controls, std::size_t target,
                    const Matrix2& u);
  // X on target controlled by all of controls (positive polarity), borrowing
  // scratch qubits in any state; scratch is returned to its input state.
  // Needs at least controls.size() - 2 scratch qubits.
  void ncx(std::span<const std::size_t> controls, std::size_t target,
           std::span<const std::size_t> scratch);
  // Fredkin gate: CX(b,a) CCX(c,a,b) CX(b,a).
  void cswap(std::size_t control, std::size_t a, std::size_t b);

  // See StateVector::project.
  double post_select(std::size_t qubit, int outcome);

  // shots i.i.d. draws from the register's marginal distribution.
  Histogram sample(const Register& reg, std::uint64_t shots,
                   std::uint64_t seed) const;

 private:
  void controlled_u_decomposed(std::span<const Control> controls,
                               std::size_t target, const Matrix2& u);
  void ncx_ladder(std::span<const std::size_t> controls, std::size_t target,
                  std::span<const std::size_t> scratch);

  RegisterLayout layout_;
  StateVector state_;
  GateCounter counter_;
  Synthesis synthesis_;
};

}  // namespace qnlp::qsim
