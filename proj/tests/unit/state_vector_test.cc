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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "qnlp/common/errors.h"
#include "test_util.h"

namespace qnlp::qsim {
namespace {

using testing::controlled_dense;
using testing::max_deviation;
using testing::random_state;
using testing::random_unitary;
using testing::swap_dense;

constexpr double kTol = 1e-10;

TEST(StateVector, StartsInZeroState) {
  StateVector s(3);
  EXPECT_EQ(s.dimension(), 8u);
  EXPECT_EQ(s.amplitude(0), Amplitude(1.0));
  EXPECT_DOUBLE_EQ(s.norm_squared(), 1.0);
}

TEST(StateVector, RejectsTooManyQubits) {
  EXPECT_THROW(StateVector(kMaxQubits + 1), CapacityError);
}

TEST(StateVector, FromAmplitudesNeedsPowerOfTwo) {
  EXPECT_THROW(StateVector::from_amplitudes({1.0, 0.0, 0.0}), InvalidArgument);
  EXPECT_THROW(StateVector::from_amplitudes({}), InvalidArgument);
}

TEST(StateVector, XFlipsZeroToOne) {
  StateVector s(1);
  s.apply_x(0);
  EXPECT_NEAR(std::abs(s.amplitude(1) - 1.0), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(s.amplitude(0)), 0.0, 1e-12);
}

TEST(StateVector, XTwiceIsIdentity) {
  std::mt19937_64 rng(5);
  auto v = random_state(3, rng);
  auto s = StateVector::from_amplitudes(v);
  s.apply_x(2);
  s.apply_x(2);
  EXPECT_LT(max_deviation(s.amplitudes(), v), 1e-12);
}

TEST(StateVector, XOnQubitOneIsLittleEndian) {
  const double r = 1.0 / std::sqrt(2.0);
  auto s = StateVector::from_amplitudes({r, r, 0.0, 0.0});  // (|00>+|01>)/sqrt2
  s.apply_x(1);
  // (|10>+|11>)/sqrt2: indices 2 and 3.
  EXPECT_NEAR(std::abs(s.amplitude(2) - r), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(s.amplitude(3) - r), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(s.amplitude(0)), 0.0, 1e-12);
}

TEST(StateVector, RyHalfAngleConvention) {
  StateVector s(1);
  s.apply(Matrix2::ry(std::numbers::pi / 2), 0);
  EXPECT_NEAR(s.amplitude(0).real(), std::cos(std::numbers::pi / 4), 1e-12);
  EXPECT_NEAR(s.amplitude(1).real(), std::sin(std::numbers::pi / 4), 1e-12);

  StateVector t(1);
  t.apply(Matrix2::ry(std::numbers::pi), 0);
  EXPECT_NEAR(std::abs(t.amplitude(1)), 1.0, 1e-12);
}

TEST(StateVector, ControlledXOnSetControl) {
  StateVector s(2);
  s.apply_x(0);  // |q1 q0> = |01>: control qubit 0 set
  const Control c{0, true};
  s.apply(Matrix2::pauli_x(), 1, {&c, 1});
  EXPECT_NEAR(std::abs(s.amplitude(3)), 1.0, 1e-12);
}

TEST(StateVector, RejectsOverlappingQubits) {
  StateVector s(3);
  const Control c{1, true};
  EXPECT_THROW(s.apply(Matrix2::pauli_x(), 1, {&c, 1}), InvalidArgument);
  const Control dup[] = {{0, true}, {0, false}};
  EXPECT_THROW(s.apply(Matrix2::pauli_x(), 2, dup), InvalidArgument);
  EXPECT_THROW(s.apply_x(3), InvalidArgument);
  EXPECT_THROW(s.apply_swap(1, 1), InvalidArgument);
}

// Random controlled gates and swaps against the dense oracle, interleaved
// with X gates so that every polarity/frame combination is exercised.
TEST(StateVector, MatchesDenseOracleOnRandomCircuits) {
  std::mt19937_64 rng(2024);
  for (std::size_t q = 1; q <= 6; ++q) {
    auto ref = random_state(q, rng);
    auto s = StateVector::from_amplitudes(ref);
    std::uniform_int_distribution<std::size_t> pick_q(0, q - 1);
    for (int step = 0; step < 40; ++step) {
      std::vector<std::size_t> order(q);
      for (std::size_t i = 0; i < q; ++i) order[i] = i;
      std::shuffle(order.begin(), order.end(), rng);
      const int kind = static_cast<int>(rng() % 3);
      if (kind == 0) {
        const std::size_t t = pick_q(rng);
        s.apply_x(t);
        ref = controlled_dense(q, Matrix2::pauli_x(), t, {}).apply(ref);
      } else if (kind == 1) {
        const std::size_t k = rng() % q;  // number of controls
        std::vector<Control> ctl;
        for (std::size_t i = 0; i < k; ++i) {
          ctl.push_back({order[i + 1], rng() % 2 == 0});
        }
        const Matrix2 u =
            rng() % 4 == 0 ? Matrix2::pauli_x() : random_unitary(rng);
        s.apply(u, order[0], ctl);
        ref = controlled_dense(q, u, order[0], ctl).apply(ref);
      } else if (q >= 2) {
        const std::size_t k = rng() % (q - 1);
        std::vector<Control> ctl;
        for (std::size_t i = 0; i < k; ++i) {
          ctl.push_back({order[i + 2], rng() % 2 == 0});
        }
        s.apply_swap(order[0], order[1], ctl);
        ref = swap_dense(q, order[0], order[1], ctl).apply(ref);
      }
      ASSERT_LT(max_deviation(s.amplitudes(), ref), kTol)
          << "q=" << q << " step=" << step;
    }
  }
}

TEST(StateVector, NormPreservedOverLongRandomSequence) {
  std::mt19937_64 rng(77);
  const std::size_t q = 6;
  auto s = StateVector::from_amplitudes(random_state(q, rng));
  for (int step = 0; step < 1000; ++step) {
    const std::size_t t = rng() % q;
    const std::size_t c = (t + 1 + rng() % (q - 1)) % q;
    const Control ctl{c, rng() % 2 == 0};
    switch (rng() % 3) {
      case 0:
        s.apply_x(t);
        break;
      case 1:
        s.apply(random_unitary(rng), t, {&ctl, 1});
        break;
      default:
        s.apply(Matrix2::hadamard(), t);
        break;
    }
  }
  EXPECT_NEAR(s.norm_squared(), 1.0, kTol);
}

TEST(StateVector, ProjectSelectsOutcome) {
  StateVector s(1);
  s.apply(Matrix2::hadamard(), 0);
  EXPECT_NEAR(s.probability(0, 0), 0.5, 1e-12);
  EXPECT_NEAR(s.project(0, 0), 0.5, 1e-12);
  EXPECT_NEAR(std::abs(s.amplitude(0)), 1.0, 1e-12);
  EXPECT_NEAR(std::abs(s.amplitude(1)), 0.0, 1e-12);
}

TEST(StateVector, ProjectOntoImpossibleOutcomeThrows) {
  StateVector s(1);
  EXPECT_THROW(s.project(0, 1), ZeroNormError);
  EXPECT_THROW(s.project(0, 2), InvalidArgument);
}

TEST(StateVector, ProjectRespectsFrame) {
  StateVector s(2);
  s.apply_x(1);
  EXPECT_NEAR(s.probability(1, 1), 1.0, 1e-12);
  EXPECT_NEAR(s.project(1, 1), 1.0, 1e-12);
  EXPECT_NEAR(std::abs(s.amplitude(2)), 1.0, 1e-12);
}

TEST(StateVector, MarginalSumsOverOtherQubits) {
  std::mt19937_64 rng(9);
  auto v = random_state(4, rng);
  auto s = StateVector::from_amplitudes(v);
  s.apply_x(2);
  const auto logical = s.amplitudes();
  const auto m = s.marginal(1, 2);
  ASSERT_EQ(m.size(), 4u);
  for (std::uint64_t val = 0; val < 4; ++val) {
    double expect = 0.0;
    for (std::uint64_t i = 0; i < 16; ++i) {
      if (((i >> 1) & 3U) == val) expect += std::norm(logical[i]);
    }
    EXPECT_NEAR(m[val], expect, 1e-12);
  }
}

}  // namespace
}  // namespace qnlp::qsim
