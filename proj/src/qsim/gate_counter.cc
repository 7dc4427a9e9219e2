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
#include "qnlp/qsim/gate_counter.h"

namespace qnlp::qsim {

std::string GateCounter::report() const {
  return "one_qubit_calls: " + std::to_string(one_qubit_calls) +
         "\ntwo_qubit_calls: " + std::to_string(two_qubit_calls) + "\n";
}

namespace gate_cost {

GateCounter controlled_u(std::size_t num_controls) {
  if (num_controls == 0) return {1, 0};
  std::uint64_t two = 1;
  for (std::size_t k = 2; k <= num_controls; ++k) two = 2 + 3 * two;
  return {0, two};
}

GateCounter ncx_with_scratch(std::size_t num_controls) {
  if (num_controls <= 2) return controlled_u(num_controls);
  return {0, 4 * (num_controls - 2) * controlled_u(2).two_qubit_calls};
}

GateCounter negative_controls(std::size_t count) { return {2 * count, 0}; }

}  // namespace gate_cost

}  // namespace qnlp::qsim
