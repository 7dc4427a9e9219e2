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
#include "qnlp/qsim/matrix2.h"

#include <cmath>

namespace qnlp::qsim {

Matrix2 Matrix2::identity() { return {{1.0, 0.0, 0.0, 1.0}}; }

Matrix2 Matrix2::pauli_x() { return {{0.0, 1.0, 1.0, 0.0}}; }

Matrix2 Matrix2::hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  return {{s, s, s, -s}};
}

Matrix2 Matrix2::ry(double theta) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  return {{c, -s, s, c}};
}

Matrix2 Matrix2::adjoint() const {
  return {{std::conj(m[0]), std::conj(m[2]), std::conj(m[1]),
           std::conj(m[3])}};
}

Matrix2 Matrix2::conjugated_by_x() const { return {{m[3], m[2], m[1], m[0]}}; }

Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
  return {{a.m[0] * b.m[0] + a.m[1] * b.m[2], a.m[0] * b.m[1] + a.m[1] * b.m[3],
           a.m[2] * b.m[0] + a.m[3] * b.m[2],
           a.m[2] * b.m[1] + a.m[3] * b.m[3]}};
}

bool Matrix2::approx_equal(const Matrix2& other, double tol) const {
  for (int k = 0; k < 4; ++k) {
    if (std::abs(m[k] - other.m[k]) > tol) return false;
  }
  return true;
}

bool Matrix2::is_unitary(double tol) const {
  return (adjoint() * *this).approx_equal(identity(), tol);
}

Matrix2 unitary_sqrt(const Matrix2& u) {
  // sqrt(U) = (U + s I) / sqrt(tr U + 2 s) with s^2 = det U. Both branches of
  // s are valid; take the one that keeps the denominator away from zero.
  const Amplitude det = u.m[0] * u.m[3] - u.m[1] * u.m[2];
  const Amplitude trace = u.m[0] + u.m[3];
  Amplitude s = std::sqrt(det);
  if (std::abs(trace + 2.0 * s) < std::abs(trace - 2.0 * s)) s = -s;
  const Amplitude t = std::sqrt(trace + 2.0 * s);
  return {{(u.m[0] + s) / t, u.m[1] / t, u.m[2] / t, (u.m[3] + s) / t}};
}

}  // namespace qnlp::qsim
