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
#include "qnlp/qsim/register_layout.h"

#include <algorithm>

#include "qnlp/common/errors.h"

namespace qnlp::qsim {

std::size_t Register::operator[](std::size_t i) const {
  if (i >= width) {
    throw InvalidArgument("qubit " + std::to_string(i) +
                          " out of range for register '" + name +
                          "' of width " + std::to_string(width));
  }
  return offset + i;
}

std::vector<std::size_t> Register::qubits() const {
  std::vector<std::size_t> out(width);
  for (std::size_t i = 0; i < width; ++i) out[i] = offset + i;
  return out;
}

const Register& RegisterLayout::add(const std::string& name,
                                    std::size_t width) {
  if (contains(name)) {
    throw InvalidArgument("duplicate register name '" + name + "'");
  }
  registers_.push_back(Register{name, num_qubits_, width});
  num_qubits_ += width;
  return registers_.back();
}

const Register& RegisterLayout::at(const std::string& name) const {
  auto it = std::find_if(registers_.begin(), registers_.end(),
                         [&](const Register& r) { return r.name == name; });
  if (it == registers_.end()) {
    throw InvalidArgument("no register named '" + name + "'");
  }
  return *it;
}

bool RegisterLayout::contains(const std::string& name) const {
  return std::any_of(registers_.begin(), registers_.end(),
                     [&](const Register& r) { return r.name == name; });
}

RegisterLayout RegisterLayout::memory_layout(std::size_t pattern_width) {
  if (pattern_width == 0) throw InvalidArgument("pattern width must be >= 1");
  RegisterLayout layout;
  layout.add(kMemoryRegister, pattern_width);
  layout.add(kControlRegister, 2);
  layout.add(kAuxRegister, pattern_width);
  return layout;
}

}  // namespace qnlp::qsim
