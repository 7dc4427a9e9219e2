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

#include "qnlp/hamming/hamming_representer.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "qnlp/common/errors.h"
#include "test_util.h"

namespace qnlp {
namespace {

PatternSet small_example() {
  std::vector<Pattern> ps;
  for (const char* s :
       {"01100", "01000", "01110", "01010", "10011", "10111", "10001", "10101"}) {
    ps.push_back(Pattern::parse(s));
  }
  return PatternSet(ps);
}

double entry_probability(const WeightedDistribution& d, const char* bits) {
  for (const WeightedEntry& e : d.entries) {
    if (e.pattern == Pattern::parse(bits)) return e.probability;
  }
  ADD_FAILURE() << bits << " not in distribution";
  return -1.0;
}

TEST(LoadTestPattern, WritesAuxRegisterOnly) {
  EncodedMemory mem = encode(small_example());
  const Pattern x = Pattern::parse("00111");
  load_test_pattern(mem.simulator, mem.registers, x);
  const auto& sv = mem.simulator.state();
  const auto aux = mem.simulator.state().marginal(mem.registers.aux.offset, 5);
  EXPECT_NEAR(aux[x.value()], 1.0, 1e-12);
  const auto m = sv.marginal(0, 5);
  EXPECT_NEAR(m[Pattern::parse("01100").value()], 1.0 / 8, 1e-12);
}

TEST(LoadTestPattern, ZeroPatternLeavesAuxZero) {
  EncodedMemory mem = encode(small_example());
  load_test_pattern(mem.simulator, mem.registers, Pattern(0, 5));
  EXPECT_NEAR(mem.simulator.state().marginal(mem.registers.aux.offset, 5)[0],
              1.0, 1e-12);
}

TEST(LoadTestPattern, AiwValue) {
  const Pattern x = Pattern::parse("1111100011");
  EXPECT_EQ(x.value(), 995u);
  EncodedMemory mem = encode(PatternSet({x}));
  load_test_pattern(mem.simulator, mem.registers, x);
  EXPECT_NEAR(mem.simulator.state().marginal(mem.registers.aux.offset, 10)[995],
              1.0, 1e-12);
}

TEST(LoadTestPattern, RejectsWidthMismatchAndDirtyRegisters) {
  EncodedMemory mem = encode(small_example());
  EXPECT_THROW(load_test_pattern(mem.simulator, mem.registers, Pattern(0, 4)),
               InvalidArgument);
  load_test_pattern(mem.simulator, mem.registers, Pattern(1, 5));
  EXPECT_THROW(load_test_pattern(mem.simulator, mem.registers, Pattern(1, 5)),
               InvalidArgument);
}

// Before post-selection u1 carries amplitude cos(d pi / 2n) on the branch of
// each stored pattern.
TEST(DistanceRotations, U1AmplitudeFollowsDistance) {
  const unsigned n = 5;
  const Pattern x(0, n);
  for (int d = 0; d <= static_cast<int>(n); ++d) {
    const Pattern p((1ULL << d) - 1, n);
    EncodedMemory mem = encode(PatternSet({p}));
    load_test_pattern(mem.simulator, mem.registers, x);
    apply_distance_rotations(mem.simulator, mem.registers);
    const double expect = std::cos(d * std::numbers::pi / (2.0 * n));
    EXPECT_NEAR(std::sqrt(mem.simulator.state().probability(mem.registers.u1(), 1)),
                std::abs(expect), 1e-12)
        << "d=" << d;
  }
  EXPECT_NEAR(std::cos(2 * std::numbers::pi / 10), 0.80902, 1e-5);
}

TEST(Represent, SmallExampleAllZerosTest) {
  const EncodedMemory mem = encode(small_example());
  const WeightedDistribution d = represent(mem, Pattern(0, 5));
  EXPECT_NEAR(d.success_probability, 0.5, 1e-10);
  EXPECT_NEAR(entry_probability(d, "01000"),
              std::pow(std::cos(std::numbers::pi / 10), 2) / 4.0, 1e-10);
  EXPECT_NEAR(entry_probability(d, "01000"), 0.22613, 1e-5);
}

TEST(Represent, SinglePatternEqualToTest) {
  const Pattern x = Pattern::parse("1011");
  const EncodedMemory mem = encode(PatternSet({x}));
  const WeightedDistribution d = represent(mem, x, SamplingRequest{1000, 3});
  ASSERT_EQ(d.entries.size(), 1u);
  EXPECT_NEAR(d.entries[0].probability, 1.0, 1e-12);
  EXPECT_NEAR(d.success_probability, 1.0, 1e-12);
  EXPECT_EQ(d.entries[0].count, 1000u);
}

TEST(Represent, OrthogonalTestIsZeroNormError) {
  const EncodedMemory mem = encode(PatternSet({Pattern::parse("0110")}));
  EXPECT_THROW(represent(mem, Pattern::parse("1001")), ZeroNormError);
}

TEST(Represent, LeavesEncodedMemoryUntouched) {
  const EncodedMemory mem = encode(small_example());
  const auto before = mem.simulator.state().amplitudes();
  represent(mem, Pattern(3, 5));
  EXPECT_EQ(mem.simulator.state().amplitudes(), before);
}

TEST(Represent, ResetsAuxAndLeavesU1Set) {
  EncodedMemory mem = encode(small_example());
  const Pattern x = Pattern::parse("00111");
  represent_in_place(mem, x);
  const auto& sv = mem.simulator.state();
  EXPECT_NEAR(sv.marginal(mem.registers.aux.offset, 5)[0], 1.0, 1e-10);
  EXPECT_NEAR(sv.probability(mem.registers.u1(), 1), 1.0, 1e-10);
}

// Random memories and tests against the classical weight oracle, including
// the success probability and the sum-to-one property.
TEST(Represent, MatchesClassicalOracle) {
  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 30; ++trial) {
    const unsigned n = 1 + static_cast<unsigned>(rng() % 6);
    const PatternSet set =
        testing::random_pattern_set(n, 1 + rng() % (1ULL << n), rng);
    const Pattern x(rng() % (1ULL << n), n);
    bool all_complement = true;
    for (const Pattern& p : set.patterns()) {
      all_complement = all_complement && (p.value() ^ x.value()) == (1ULL << n) - 1;
    }
    if (all_complement) continue;
    const WeightedDistribution d = represent(encode(set), x);
    const auto oracle = testing::hamming_oracle(set, x);
    double sum = 0.0, mean = 0.0;
    for (std::size_t j = 0; j < set.size(); ++j) {
      EXPECT_NEAR(d.entries[j].probability, oracle[j], 1e-9);
      sum += d.entries[j].probability;
      const int dist = std::popcount(set[j].value() ^ x.value());
      mean += std::pow(std::cos(dist * std::numbers::pi / (2.0 * n)), 2);
    }
    EXPECT_NEAR(sum, 1.0, 1e-10);
    EXPECT_NEAR(d.success_probability, mean / set.size(), 1e-10);
  }
}

TEST(Represent, StrictlyDecreasingInDistance) {
  std::mt19937_64 rng(17);
  const PatternSet set = testing::random_pattern_set(6, 40, rng);
  const Pattern x(5, 6);
  const WeightedDistribution d = represent(encode(set), x);
  for (const auto& a : d.entries) {
    for (const auto& b : d.entries) {
      if (a.distance < b.distance) {
        EXPECT_GT(a.probability, b.probability);
      }
    }
  }
}

TEST(Represent, InvariantUnderStorageOrder) {
  std::mt19937_64 rng(71);
  const PatternSet set = testing::random_pattern_set(5, 12, rng);
  std::vector<Pattern> shuffled = set.patterns();
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  const Pattern x(9, 5);
  const auto a = represent(encode(set), x);
  const auto b = represent(encode(PatternSet(shuffled)), x);
  for (const auto& ea : a.entries) {
    for (const auto& eb : b.entries) {
      if (ea.pattern == eb.pattern) {
        EXPECT_NEAR(ea.probability, eb.probability, 1e-12);
      }
    }
  }
}

TEST(Represent, SamplingIsDeterministicAndWithinSet) {
  std::mt19937_64 rng(12);
  const PatternSet set = testing::random_pattern_set(6, 20, rng);
  const EncodedMemory mem = encode(set);
  const auto a = represent(mem, Pattern(0, 6), SamplingRequest{20000, 42});
  const auto b = represent(mem, Pattern(0, 6), SamplingRequest{20000, 42});
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    EXPECT_EQ(a.entries[i].count, b.entries[i].count);
    total += a.entries[i].count;
    const double mu = 20000 * a.entries[i].probability;
    const double sigma = std::sqrt(20000 * a.entries[i].probability *
                                   (1 - a.entries[i].probability));
    EXPECT_LT(std::abs(a.entries[i].count - mu), 5 * sigma + 1);
  }
  EXPECT_EQ(total, 20000u);
}

}  // namespace
}  // namespace qnlp
