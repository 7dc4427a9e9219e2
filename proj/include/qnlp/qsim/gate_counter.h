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

namespace qnlp::qsim {

// Tally of elementary gate calls. One-qubit calls are X, Ry and H; two-qubit
// calls are singly-controlled 2x2 unitaries (CX, CRy, and the controlled
// square roots used when splitting doubly-controlled gates).
struct GateCounter {
  std::uint64_t one_qubit_calls = 0;
  std::uint64_t two_qubit_calls = 0;

  std::uint64_t total() const { return one_qubit_calls + two_qubit_calls; }

  GateCounter& operator+=(const GateCounter& other) {
    one_qubit_calls += other.one_qubit_calls;
    two_qubit_calls += other.two_qubit_calls;
    return *this;
  }
  friend GateCounter operator-(GateCounter a, const GateCounter& b) {
    a.one_qubit_calls -= b.one_qubit_calls;
    a.two_qubit_calls -= b.two_qubit_calls;
    return a;
  }
  friend bool operator==(const GateCounter&, const GateCounter&) = default;

  // "one_qubit_calls: N\ntwo_qubit_calls: M\n".
  std::string report() const;
};

// Cost of gates that are simulated natively but tallied as their
// decomposition into elementary calls.
namespace gate_cost {

// U with k positive controls and no scratch qubits. k = 1 is one call,
// k = 2 splits into CV, CX, CV^dag, CX, CV (five calls), and k >= 3 recurses
// as CV, C^(k-1)X, CV^dag, C^(k-1)X, C^(k-1)V.
GateCounter controlled_u(std::size_t num_controls);

// X with k positive controls and at least k - 2 borrowed scratch qubits:
// a ladder of 4(k - 2) Toffolis for k >= 3, each Toffoli costing five calls.
GateCounter ncx_with_scratch(std::size_t num_controls);

// Every negative control is an X before and after the gate.
GateCounter negative_controls(std::size_t count);

}  // namespace gate_cost

}  // namespace qnlp::qsim
