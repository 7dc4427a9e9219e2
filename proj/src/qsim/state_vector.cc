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
#include "qnlp/qsim/state_vector.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "qnlp/common/errors.h"
#include "qnlp/common/tolerances.h"

namespace qnlp::qsim {
namespace {

// Next index after i whose bits under holes are all zero.
inline std::uint64_t next_free(std::uint64_t i, std::uint64_t holes) {
  return ((i | holes) + 1) & ~holes;
}

// out = m * (a0, a1) written out on doubles; std::complex multiplication
// carries NaN-recovery branches that dominate these loops.
inline void rotate(const Matrix2& m, Amplitude& x0, Amplitude& x1) {
  const double r0 = x0.real(), i0 = x0.imag();
  const double r1 = x1.real(), i1 = x1.imag();
  const auto& a = m.m;
  x0 = {a[0].real() * r0 - a[0].imag() * i0 + a[1].real() * r1 - a[1].imag() * i1,
        a[0].real() * i0 + a[0].imag() * r0 + a[1].real() * i1 + a[1].imag() * r1};
  x1 = {a[2].real() * r0 - a[2].imag() * i0 + a[3].real() * r1 - a[3].imag() * i1,
        a[2].real() * i0 + a[2].imag() * r0 + a[3].real() * i1 + a[3].imag() * r1};
}

struct Mask {
  std::uint64_t bits = 0;
  std::uint64_t values = 0;
};

}  // namespace

StateVector::StateVector(std::size_t num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits > kMaxQubits) {
    throw CapacityError("state vector of " + std::to_string(num_qubits) +
                        " qubits exceeds the " + std::to_string(kMaxQubits) +
                        "-qubit limit");
  }
  amps_.assign(dimension(), Amplitude{0.0, 0.0});
  amps_[0] = 1.0;
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amplitudes) {
  const std::size_t size = amplitudes.size();
  if (size == 0 || !std::has_single_bit(size)) {
    throw InvalidArgument("amplitude count " + std::to_string(size) +
                          " is not a power of two");
  }
  StateVector out(static_cast<std::size_t>(std::countr_zero(size)));
  out.amps_ = std::move(amplitudes);
  return out;
}

std::vector<Amplitude> StateVector::amplitudes() const {
  std::vector<Amplitude> out(amps_.size());
  for (std::uint64_t i = 0; i < amps_.size(); ++i) out[i] = amps_[i ^ frame_];
  return out;
}

double StateVector::norm_squared() const {
  double sum = 0.0;
  for (const auto& a : amps_) sum += std::norm(a);
  return sum;
}

void StateVector::check_qubit(std::size_t qubit) const {
  if (qubit >= num_qubits_) {
    throw InvalidArgument("qubit index " + std::to_string(qubit) +
                          " out of range for " + std::to_string(num_qubits_) +
                          " qubits");
  }
}

void StateVector::apply_x(std::size_t qubit) {
  check_qubit(qubit);
  frame_ ^= std::uint64_t{1} << qubit;
}

void StateVector::apply(const Matrix2& u, std::size_t target,
                        std::span<const Control> controls) {
  check_qubit(target);
  const std::uint64_t tbit = std::uint64_t{1} << target;
  Mask mask;
  for (const Control& c : controls) {
    check_qubit(c.qubit);
    const std::uint64_t bit = std::uint64_t{1} << c.qubit;
    if (c.qubit == target || (mask.bits & bit) != 0) {
      throw InvalidArgument("control and target qubits must be distinct");
    }
    mask.bits |= bit;
    // Stored bit = logical bit ^ frame bit.
    if (c.polarity != ((frame_ & bit) != 0)) mask.values |= bit;
  }

  const Matrix2 m = (frame_ & tbit) != 0 ? u.conjugated_by_x() : u;
  const std::uint64_t holes = mask.bits | tbit;
  const std::uint64_t count = dimension() >> std::popcount(holes);
  Amplitude* amps = amps_.data();

  std::uint64_t f = 0;
  if (m.approx_equal(Matrix2::pauli_x(), 0.0)) {
    for (std::uint64_t n = 0; n < count; ++n, f = next_free(f, holes)) {
      const std::uint64_t i = f | mask.values;
      std::swap(amps[i], amps[i | tbit]);
    }
    return;
  }
  for (std::uint64_t n = 0; n < count; ++n, f = next_free(f, holes)) {
    const std::uint64_t i = f | mask.values;
    rotate(m, amps[i], amps[i | tbit]);
  }
}

void StateVector::apply_swap(std::size_t a, std::size_t b,
                             std::span<const Control> controls) {
  check_qubit(a);
  check_qubit(b);
  if (a == b) throw InvalidArgument("swap qubits must be distinct");
  const std::uint64_t abit = std::uint64_t{1} << a;
  const std::uint64_t bbit = std::uint64_t{1} << b;
  Mask mask;
  for (const Control& c : controls) {
    check_qubit(c.qubit);
    const std::uint64_t bit = std::uint64_t{1} << c.qubit;
    if (c.qubit == a || c.qubit == b || (mask.bits & bit) != 0) {
      throw InvalidArgument("control and swap qubits must be distinct");
    }
    mask.bits |= bit;
    if (c.polarity != ((frame_ & bit) != 0)) mask.values |= bit;
  }
  // Logical |1_a 0_b> <-> |0_a 1_b>. Through the frame the stored pair is
  // the same two indices with the frame bits of a and b applied.
  const std::uint64_t flip = frame_ & (abit | bbit);
  const std::uint64_t holes = mask.bits | abit | bbit;
  const std::uint64_t count = dimension() >> std::popcount(holes);
  std::uint64_t f = 0;
  for (std::uint64_t n = 0; n < count; ++n, f = next_free(f, holes)) {
    const std::uint64_t base = f | mask.values;
    std::swap(amps_[(base | abit) ^ flip], amps_[(base | bbit) ^ flip]);
  }
}

double StateVector::probability(std::size_t qubit, int outcome) const {
  check_qubit(qubit);
  if (outcome != 0 && outcome != 1) {
    throw InvalidArgument("measurement outcome must be 0 or 1");
  }
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  const std::uint64_t want =
      (static_cast<std::uint64_t>(outcome) << qubit) ^ (frame_ & bit);
  double p = 0.0;
  for (std::uint64_t i = 0; i < amps_.size(); ++i) {
    if ((i & bit) == want) p += std::norm(amps_[i]);
  }
  return p;
}

double StateVector::project(std::size_t qubit, int outcome) {
  const double p = probability(qubit, outcome);
  if (p < tolerance::kZeroProbability) {
    throw ZeroNormError("post-selecting qubit " + std::to_string(qubit) +
                            " = " + std::to_string(outcome) +
                            " has zero probability",
                        p);
  }
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  const std::uint64_t want =
      (static_cast<std::uint64_t>(outcome) << qubit) ^ (frame_ & bit);
  const double scale = 1.0 / std::sqrt(p);
  for (std::uint64_t i = 0; i < amps_.size(); ++i) {
    if ((i & bit) == want) {
      amps_[i] *= scale;
    } else {
      amps_[i] = 0.0;
    }
  }
  return p;
}

std::vector<double> StateVector::marginal(std::size_t offset,
                                          std::size_t width) const {
  if (width == 0 || offset + width > num_qubits_) {
    throw InvalidArgument("register [" + std::to_string(offset) + ", " +
                          std::to_string(offset + width) +
                          ") out of range for " + std::to_string(num_qubits_) +
                          " qubits");
  }
  std::vector<double> out(std::size_t{1} << width, 0.0);
  const std::uint64_t mask = (std::uint64_t{1} << width) - 1;
  for (std::uint64_t i = 0; i < amps_.size(); ++i) {
    const double p = std::norm(amps_[i]);
    if (p != 0.0) out[((i ^ frame_) >> offset) & mask] += p;
  }
  return out;
}

}  // namespace qnlp::qsim
