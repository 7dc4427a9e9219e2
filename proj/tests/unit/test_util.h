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

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "qnlp/common/pattern.h"
#include "qnlp/encoder/pattern_set.h"
#include "qnlp/qsim/matrix2.h"
#include "qnlp/qsim/state_vector.h"

#ifndef QNLP_TEST_DATA_DIR
#error "QNLP_TEST_DATA_DIR must be defined"
#endif

namespace qnlp::testing {

using qsim::Amplitude;

inline std::string data_path(const std::string& name) {
  return std::string(QNLP_TEST_DATA_DIR) + "/" + name;
}

// Dense 2^q x 2^q complex matrix, row-major.
struct Dense {
  std::size_t dim = 0;
  std::vector<Amplitude> a;

  explicit Dense(std::size_t d) : dim(d), a(d * d) {}
  Amplitude& operator()(std::size_t r, std::size_t c) { return a[r * dim + c]; }
  Amplitude operator()(std::size_t r, std::size_t c) const {
    return a[r * dim + c];
  }

  static Dense identity(std::size_t d) {
    Dense m(d);
    for (std::size_t i = 0; i < d; ++i) m(i, i) = 1.0;
    return m;
  }

  std::vector<Amplitude> apply(const std::vector<Amplitude>& v) const {
    std::vector<Amplitude> out(dim);
    for (std::size_t r = 0; r < dim; ++r) {
      Amplitude s = 0.0;
      for (std::size_t c = 0; c < dim; ++c) s += (*this)(r, c) * v[c];
      out[r] = s;
    }
    return out;
  }
};

// Full matrix of u on `target`, active where every control matches.
inline Dense controlled_dense(std::size_t num_qubits, const qsim::Matrix2& u,
                              std::size_t target,
                              const std::vector<qsim::Control>& controls) {
  const std::size_t dim = std::size_t{1} << num_qubits;
  Dense m(dim);
  for (std::size_t col = 0; col < dim; ++col) {
    bool active = true;
    for (const auto& c : controls) {
      active = active && (((col >> c.qubit) & 1U) == (c.polarity ? 1U : 0U));
    }
    if (!active) {
      m(col, col) = 1.0;
      continue;
    }
    const std::size_t bit = (col >> target) & 1U;
    const std::size_t zero = col & ~(std::size_t{1} << target);
    const std::size_t one = zero | (std::size_t{1} << target);
    m(zero, col) = u(0, static_cast<int>(bit));
    m(one, col) = u(1, static_cast<int>(bit));
  }
  return m;
}

// Permutation matrix swapping qubits a and b where controls match.
inline Dense swap_dense(std::size_t num_qubits, std::size_t qa, std::size_t qb,
                        const std::vector<qsim::Control>& controls) {
  const std::size_t dim = std::size_t{1} << num_qubits;
  Dense m(dim);
  for (std::size_t col = 0; col < dim; ++col) {
    bool active = true;
    for (const auto& c : controls) {
      active = active && (((col >> c.qubit) & 1U) == (c.polarity ? 1U : 0U));
    }
    std::size_t row = col;
    if (active) {
      const std::size_t ba = (col >> qa) & 1U, bb = (col >> qb) & 1U;
      row = col & ~((std::size_t{1} << qa) | (std::size_t{1} << qb));
      row |= (bb << qa) | (ba << qb);
    }
    m(row, col) = 1.0;
  }
  return m;
}

inline std::vector<Amplitude> random_state(std::size_t num_qubits,
                                           std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<Amplitude> v(std::size_t{1} << num_qubits);
  double norm = 0.0;
  for (auto& x : v) {
    x = {g(rng), g(rng)};
    norm += std::norm(x);
  }
  for (auto& x : v) x /= std::sqrt(norm);
  return v;
}

inline qsim::Matrix2 random_unitary(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
  const double a = u(rng), b = u(rng), c = u(rng), d = u(rng);
  const Amplitude ea = std::polar(1.0, a);
  qsim::Matrix2 m;
  m.m = {ea * std::polar(1.0, -b) * std::cos(c / 2),
         -ea * std::polar(1.0, -d) * std::sin(c / 2),
         ea * std::polar(1.0, d) * std::sin(c / 2),
         ea * std::polar(1.0, b) * std::cos(c / 2)};
  return m;
}

inline double max_deviation(const std::vector<Amplitude>& a,
                            const std::vector<Amplitude>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

// count distinct random patterns of the given width.
inline PatternSet random_pattern_set(unsigned width, std::size_t count,
                                     std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> pick(0, (1ULL << width) - 1);
  std::set<std::uint64_t> seen;
  std::vector<Pattern> ps;
  while (ps.size() < count) {
    const std::uint64_t v = pick(rng);
    if (seen.insert(v).second) ps.emplace_back(v, width);
  }
  return PatternSet(std::move(ps));
}

// cos^2(d pi / 2n) weights normalised over the stored patterns.
inline std::vector<double> hamming_oracle(const PatternSet& set,
                                          const Pattern& x) {
  std::vector<double> w;
  double z = 0.0;
  for (const Pattern& p : set.patterns()) {
    const int d = std::popcount(p.value() ^ x.value());
    const double c = std::cos(d * std::numbers::pi /
                              (2.0 * set.width()));
    w.push_back(c * c);
    z += c * c;
  }
  for (double& v : w) v /= z;
  return w;
}

}  // namespace qnlp::testing
