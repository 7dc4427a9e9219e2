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

#include "qnlp/corpus/hamiltonian_cycle.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>

#include "qnlp/common/errors.h"

namespace qnlp::corpus {
namespace {

DistanceMatrix random_symmetric(std::size_t k, std::mt19937_64& rng,
                                int max_weight) {
  std::uniform_int_distribution<int> pick(1, max_weight);
  DistanceMatrix w(k, std::vector<double>(k, 0.0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) w[i][j] = w[j][i] = pick(rng);
  }
  return w;
}

double brute_force_minimum(const DistanceMatrix& w) {
  std::vector<std::size_t> rest(w.size() - 1);
  std::iota(rest.begin(), rest.end(), 1);
  double best = std::numeric_limits<double>::infinity();
  do {
    std::vector<std::size_t> order{0};
    order.insert(order.end(), rest.begin(), rest.end());
    double total = 0.0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      total += w[order[i]][order[(i + 1) % order.size()]];
    }
    best = std::min(best, total);
  } while (std::next_permutation(rest.begin(), rest.end()));
  return best;
}

bool is_permutation_from(const std::vector<std::size_t>& order, std::size_t k,
                         std::size_t start) {
  std::vector<std::size_t> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> all(k);
  std::iota(all.begin(), all.end(), 0);
  return sorted == all && !order.empty() && order.front() == start;
}

TEST(HamiltonianCycle, MatchesBruteForceOnRandomGraphs) {
  std::mt19937_64 rng(2024);
  for (int g = 0; g < 50; ++g) {
    const std::size_t k = 3 + rng() % 6;
    // Small integer weights force many ties.
    const DistanceMatrix w = random_symmetric(k, rng, g % 2 ? 4 : 100);
    const auto order = min_hamiltonian_cycle(w);
    ASSERT_TRUE(is_permutation_from(order, k, 0));
    EXPECT_DOUBLE_EQ(cycle_weight(w, order), brute_force_minimum(w))
        << "graph " << g << " k=" << k;
    EXPECT_LE(w[0][order[1]], w[0][order.back()]);
    EXPECT_EQ(min_hamiltonian_cycle(w), order);
  }
}

TEST(HamiltonianCycle, ThreeVertices) {
  const DistanceMatrix w = {{0, 5, 2}, {5, 0, 1}, {2, 1, 0}};
  EXPECT_EQ(min_hamiltonian_cycle(w), (std::vector<std::size_t>{0, 2, 1}));
  EXPECT_EQ(min_hamiltonian_cycle(w, 1), (std::vector<std::size_t>{1, 2, 0}));
}

TEST(HamiltonianCycle, RecoversHiddenRing) {
  std::mt19937_64 rng(5);
  std::vector<std::size_t> ring(8);
  std::iota(ring.begin(), ring.end(), 0);
  std::shuffle(ring.begin(), ring.end(), rng);
  DistanceMatrix w(8, std::vector<double>(8, 10.0));
  for (std::size_t i = 0; i < 8; ++i) {
    w[i][i] = 0.0;
    const std::size_t a = ring[i], b = ring[(i + 1) % 8];
    w[a][b] = w[b][a] = 1.0;
  }
  const auto order = min_hamiltonian_cycle(w);
  EXPECT_DOUBLE_EQ(cycle_weight(w, order), 8.0);
  for (std::size_t i = 0; i < 8; ++i) {
    EXPECT_EQ(w[order[i]][order[(i + 1) % 8]], 1.0);
  }
}

TEST(HamiltonianCycle, Errors) {
  EXPECT_THROW(min_hamiltonian_cycle(DistanceMatrix(2, {0, 0})), CapacityError);
  std::mt19937_64 rng(1);
  EXPECT_THROW(min_hamiltonian_cycle(random_symmetric(17, rng, 5)),
               CapacityError);
  DistanceMatrix asym = {{0, 1, 2}, {1, 0, 3}, {2, 4, 0}};
  EXPECT_THROW(min_hamiltonian_cycle(asym), InvalidArgument);
  DistanceMatrix ragged = {{0, 1, 2}, {1, 0}, {2, 3, 0}};
  EXPECT_THROW(min_hamiltonian_cycle(ragged), InvalidArgument);
  DistanceMatrix inf = {{0, 1, 2}, {1, 0, std::numeric_limits<double>::infinity()},
                        {2, std::numeric_limits<double>::infinity(), 0}};
  EXPECT_THROW(min_hamiltonian_cycle(inf), InvalidArgument);
  EXPECT_THROW(min_hamiltonian_cycle(random_symmetric(4, rng, 5), 4),
               InvalidArgument);
}

TEST(HamiltonianCycle, SixteenVerticesIsSupported) {
  std::mt19937_64 rng(9);
  const DistanceMatrix w = random_symmetric(16, rng, 50);
  const auto order = min_hamiltonian_cycle(w);
  EXPECT_TRUE(is_permutation_from(order, 16, 0));
}

}  // namespace
}  // namespace qnlp::corpus
