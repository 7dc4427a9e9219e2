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
#include <string>
#include <vector>

namespace qnlp::qsim {

// A contiguous run of qubits. Qubit i of the register is global qubit
// offset + i, so register values are little-endian like the whole state.
struct Register {
  std::string name;
  std::size_t offset = 0;
  std::size_t width = 0;

  std::size_t operator[](std::size_t i) const;
  std::vector<std::size_t> qubits() const;
};

// Named registers packed from qubit 0 upwards in insertion order.
class RegisterLayout {
 public:
  RegisterLayout() = default;

  // Appends a register above every existing one. Names must be unique.
  const Register& add(const std::string& name, std::size_t width);

  const Register& at(const std::string& name) const;
  bool contains(const std::string& name) const;
  std::size_t num_qubits() const { return num_qubits_; }
  const std::vector<Register>& registers() const { return registers_; }

  // m (n qubits) at the bottom, then u (2), then a (n): 2n + 2 in total.
  static RegisterLayout memory_layout(std::size_t pattern_width);

 private:
  std::vector<Register> registers_;
  std::size_t num_qubits_ = 0;
};

// Register names used by the memory layout.
inline constexpr const char* kMemoryRegister = "m";
inline constexpr const char* kControlRegister = "u";
inline constexpr const char* kAuxRegister = "a";

}  // namespace qnlp::qsim
