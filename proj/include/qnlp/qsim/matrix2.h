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

#include <array>
#include <complex>

namespace qnlp::qsim {

using Amplitude = std::complex<double>;

// Row-major 2x2 complex matrix acting on a single qubit.
struct Matrix2 {
  std::array<Amplitude, 4> m{};

  Amplitude operator()(int row, int col) const { return m[2 * row + col]; }

  static Matrix2 identity();
  static Matrix2 pauli_x();
  static Matrix2 hadamard();
  // Ry(theta) = [[cos(theta/2), -sin(theta/2)], [sin(theta/2), cos(theta/2)]].
  static Matrix2 ry(double theta);

  Matrix2 adjoint() const;
  // X * this * X, i.e. the same operator seen through a flipped qubit.
  Matrix2 conjugated_by_x() const;

  bool is_unitary(double tol = 1e-10) const;
  bool approx_equal(const Matrix2& other, double tol = 1e-12) const;

  friend Matrix2 operator*(const Matrix2& a, const Matrix2& b);
};

// A unitary V with V * V == u. Used to split doubly-controlled gates.
Matrix2 unitary_sqrt(const Matrix2& u);

}  // namespace qnlp::qsim
