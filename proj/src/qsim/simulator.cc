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
#include "qnlp/qsim/simulator.h"

#include <algorithm>
#include <string>
#include <vector>

#include "qnlp/common/errors.h"
#include "qnlp/qsim/sampling.h"

namespace qnlp::qsim {
namespace {

void require_distinct(std::vector<std::size_t> qubits) {
  std::sort(qubits.begin(), qubits.end());
  if (std::adjacent_find(qubits.begin(), qubits.end()) != qubits.end()) {
    throw InvalidArgument("gate qubits overlap");
  }
}

std::vector<Control> positive(std::span<const std::size_t> qubits) {
  std::vector<Control> out;
  out.reserve(qubits.size());
  for (std::size_t q : qubits) out.push_back({q, true});
  return out;
}

}  // namespace

Simulator::Simulator(RegisterLayout layout, Synthesis synthesis)
    : layout_(std::move(layout)),
      state_(layout_.num_qubits()),
      synthesis_(synthesis) {}

void Simulator::set_state(StateVector state) {
  if (state.num_qubits() != state_.num_qubits()) {
    throw InvalidArgument("replacement state has " +
                          std::to_string(state.num_qubits()) +
                          " qubits, layout has " +
                          std::to_string(state_.num_qubits()));
  }
  state_ = std::move(state);
}

void Simulator::x(std::size_t qubit) {
  state_.apply_x(qubit);
  ++counter_.one_qubit_calls;
}

void Simulator::ry(std::size_t qubit, double theta) {
  apply_1q(qubit, Matrix2::ry(theta));
}

void Simulator::h(std::size_t qubit) { apply_1q(qubit, Matrix2::hadamard()); }

void Simulator::apply_1q(std::size_t qubit, const Matrix2& u) {
  state_.apply(u, qubit);
  ++counter_.one_qubit_calls;
}

void Simulator::cx(std::size_t control, std::size_t target) {
  const Control c{control, true};
  controlled_u({&c, 1}, target, Matrix2::pauli_x());
}

void Simulator::controlled_u(std::span<const Control> controls,
                             std::size_t target, const Matrix2& u) {
  if (controls.empty()) {
    apply_1q(target, u);
    return;
  }
  std::vector<std::size_t> all{target};
  std::vector<std::size_t> positives;
  std::vector<std::size_t> negatives;
  for (const Control& c : controls) {
    all.push_back(c.qubit);
    positives.push_back(c.qubit);
    if (!c.polarity) negatives.push_back(c.qubit);
  }
  require_distinct(all);

  if (synthesis_ == Synthesis::kNative) {
    state_.apply(u, target, controls);
    counter_ += gate_cost::controlled_u(controls.size());
    counter_ += gate_cost::negative_controls(negatives.size());
    return;
  }
  for (std::size_t q : negatives) x(q);
  const std::vector<Control> pos = positive(positives);
  controlled_u_decomposed(pos, target, u);
  for (std::size_t q : negatives) x(q);
}

void Simulator::controlled_u_decomposed(std::span<const Control> controls,
                                        std::size_t target, const Matrix2& u) {
  if (controls.size() == 1) {
    state_.apply(u, target, controls);
    ++counter_.two_qubit_calls;
    return;
  }
  // C^k U = CV(c_k, t) C^(k-1)X(.., c_k) CV^dag(c_k, t) C^(k-1)X(.., c_k)
  //         C^(k-1)V(c_1..c_(k-1), t), with V^2 = U.
  const Matrix2 v = unitary_sqrt(u);
  const std::span<const Control> last = controls.last(1);
  const std::span<const Control> rest = controls.first(controls.size() - 1);
  const std::size_t pivot = last[0].qubit;
  controlled_u_decomposed(last, target, v);
  controlled_u_decomposed(rest, pivot, Matrix2::pauli_x());
  controlled_u_decomposed(last, target, v.adjoint());
  controlled_u_decomposed(rest, pivot, Matrix2::pauli_x());
  controlled_u_decomposed(rest, target, v);
}

void Simulator::ncx(std::span<const std::size_t> controls, std::size_t target,
                    std::span<const std::size_t> scratch) {
  if (controls.empty()) {
    throw InvalidArgument("ncx needs at least one control");
  }
  const std::size_t k = controls.size();
  const std::size_t needed = k >= 3 ? k - 2 : 0;
  if (scratch.size() < needed) {
    throw CapacityError("ncx with " + std::to_string(k) + " controls needs " +
                        std::to_string(needed) + " scratch qubits, got " +
                        std::to_string(scratch.size()));
  }
  std::vector<std::size_t> all(controls.begin(), controls.end());
  all.push_back(target);
  all.insert(all.end(), scratch.begin(), scratch.begin() + needed);
  require_distinct(all);
  for (std::size_t q : all) {
    if (q >= state_.num_qubits()) {
      throw InvalidArgument("qubit index " + std::to_string(q) +
                            " out of range");
    }
  }

  const std::vector<Control> pos = positive(controls);
  if (synthesis_ == Synthesis::kNative) {
    state_.apply(Matrix2::pauli_x(), target, pos);
    counter_ += gate_cost::ncx_with_scratch(k);
    return;
  }
  if (k <= 2) {
    controlled_u_decomposed(pos, target, Matrix2::pauli_x());
    return;
  }
  ncx_ladder(controls, target, scratch.first(needed));
}

void Simulator::ncx_ladder(std::span<const std::size_t> c, std::size_t target,
                           std::span<const std::size_t> s) {
  // Borrowed-qubit construction: 4(k - 2) Toffolis; every scratch qubit is
  // toggled an even number of times by the same products, so it returns to
  // whatever state it held.
  const std::size_t k = c.size();
  auto toffoli = [this](std::size_t a, std::size_t b, std::size_t t) {
    const Control ctl[2] = {{a, true}, {b, true}};
    controlled_u_decomposed(ctl, t, Matrix2::pauli_x());
  };
  auto descend = [&] {
    for (std::size_t i = k - 2; i >= 2; --i) toffoli(c[i], s[i - 2], s[i - 1]);
  };
  auto ascend = [&] {
    for (std::size_t i = 2; i <= k - 2; ++i) toffoli(c[i], s[i - 2], s[i - 1]);
  };

  toffoli(c[k - 1], s[k - 3], target);
  descend();
  toffoli(c[0], c[1], s[0]);
  ascend();
  toffoli(c[k - 1], s[k - 3], target);

  descend();
  toffoli(c[0], c[1], s[0]);
  ascend();
}

void Simulator::cswap(std::size_t control, std::size_t a, std::size_t b) {
  require_distinct({control, a, b});
  cx(b, a);
  const Control ctl[2] = {{control, true}, {a, true}};
  controlled_u(ctl, b, Matrix2::pauli_x());
  cx(b, a);
}

double Simulator::post_select(std::size_t qubit, int outcome) {
  return state_.project(qubit, outcome);
}

Histogram Simulator::sample(const Register& reg, std::uint64_t shots,
                            std::uint64_t seed) const {
  const std::vector<double> dist = state_.marginal(reg.offset, reg.width);
  const std::vector<std::uint64_t> counts = sample_counts(dist, shots, seed);
  Histogram out;
  for (std::uint64_t v = 0; v < counts.size(); ++v) {
    if (counts[v] != 0) out[v] = counts[v];
  }
  return out;
}

}  // namespace qnlp::qsim
