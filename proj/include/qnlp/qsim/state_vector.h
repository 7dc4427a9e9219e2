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
#include <span>
#include <vector>

#include "qnlp/qsim/matrix2.h"

namespace qnlp::qsim {

inline constexpr std::size_t kMaxQubits = 28;

struct Control {
  std::size_t qubit = 0;
  bool polarity = true;  // fire when the qubit is |1> (true) or |0> (false)
};

// Dense 2^q amplitude vector, little-endian: basis index bit k is qubit k.
//
// Pauli-X gates are absorbed into a classical flip frame instead of touching
// memory: the logical amplitude of basis state i is stored at i ^ frame.
// Every accessor works in logical indices, so the frame is invisible to
// callers. Kernels here do no bookkeeping; Simulator layers gate accounting
// and decomposition on top.
class StateVector {
 public:
  // |0...0> on num_qubits qubits. Throws CapacityError above kMaxQubits.
  explicit StateVector(std::size_t num_qubits);

  // Takes amplitudes verbatim; the size must be a power of two.
  static StateVector from_amplitudes(std::vector<Amplitude> amplitudes);

  std::size_t num_qubits() const { return num_qubits_; }
  std::uint64_t dimension() const { return std::uint64_t{1} << num_qubits_; }

  Amplitude amplitude(std::uint64_t index) const {
    return amps_[index ^ frame_];
  }
  std::vector<Amplitude> amplitudes() const;
  double norm_squared() const;

  void apply_x(std::size_t qubit);
  // Applies u to target on the subspace where every control matches.
  void apply(const Matrix2& u, std::size_t target,
             std::span<const Control> controls = {});
  void apply_swap(std::size_t a, std::size_t b,
                  std::span<const Control> controls = {});

  double probability(std::size_t qubit, int outcome) const;
  // Zeroes amplitudes inconsistent with the outcome and renormalizes.
  // Returns the probability of the outcome before projection. Throws
  // ZeroNormError when it is below tolerance::kZeroProbability.
  double project(std::size_t qubit, int outcome);

  // Probability of each value of qubits [offset, offset + width).
  std::vector<double> marginal(std::size_t offset, std::size_t width) const;

 private:
  void check_qubit(std::size_t qubit) const;

  std::size_t num_qubits_;
  std::vector<Amplitude> amps_;
  std::uint64_t frame_ = 0;
};

}  // namespace qnlp::qsim
