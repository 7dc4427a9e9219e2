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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "qnlp/common/errors.h"

namespace qnlp::corpus {
namespace {

void validate(const DistanceMatrix& w, std::size_t start) {
  const std::size_t k = w.size();
  if (k < kMinCycleSize || k > kMaxCycleSize) {
    throw CapacityError("Hamiltonian cycle solver supports " +
                        std::to_string(kMinCycleSize) + " to " +
                        std::to_string(kMaxCycleSize) + " vertices, got " +
                        std::to_string(k));
  }
  if (start >= k) throw InvalidArgument("start vertex out of range");
  for (std::size_t i = 0; i < k; ++i) {
    if (w[i].size() != k) throw InvalidArgument("distance matrix not square");
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (!std::isfinite(w[i][j])) {
        throw InvalidArgument("distance matrix has a non-finite entry");
      }
      if (w[i][j] != w[j][i]) {
        throw InvalidArgument("distance matrix is not symmetric");
      }
    }
  }
}

}  // namespace

double cycle_weight(const DistanceMatrix& weights,
                    const std::vector<std::size_t>& order) {
  double total = 0.0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    total += weights[order[i]][order[(i + 1) % order.size()]];
  }
  return total;
}

std::vector<std::size_t> min_hamiltonian_cycle(const DistanceMatrix& weights,
                                               std::size_t start) {
  validate(weights, start);
  const std::size_t k = weights.size();

  // Vertices other than start, renumbered 0..m-1.
  std::vector<std::size_t> others;
  for (std::size_t v = 0; v < k; ++v) {
    if (v != start) others.push_back(v);
  }
  const std::size_t m = others.size();
  const std::uint32_t full = (std::uint32_t{1} << m) - 1;
  constexpr double kInf = std::numeric_limits<double>::infinity();

  // best[mask][j]: cheapest path leaving start, visiting exactly mask and
  // ending at others[j] (j in mask).
  std::vector<double> best((std::size_t{full} + 1) * m, kInf);
  auto at = [&](std::uint32_t mask, std::size_t j) -> double& {
    return best[std::size_t{mask} * m + j];
  };
  for (std::size_t j = 0; j < m; ++j) {
    at(std::uint32_t{1} << j, j) = weights[start][others[j]];
  }
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    for (std::size_t j = 0; j < m; ++j) {
      if (!(mask >> j & 1U)) continue;
      const double here = at(mask, j);
      if (here == kInf) continue;
      for (std::size_t t = 0; t < m; ++t) {
        if (mask >> t & 1U) continue;
        double& next = at(mask | (std::uint32_t{1} << t), t);
        next = std::min(next, here + weights[others[j]][others[t]]);
      }
    }
  }
  double optimum = kInf;
  for (std::size_t j = 0; j < m; ++j) {
    optimum = std::min(optimum, at(full, j) + weights[others[j]][start]);
  }
  const double slack = 1e-9 * std::max(1.0, std::abs(optimum));

  // Walk forward choosing the smallest vertex that still completes an
  // optimal tour. By symmetry, best[R][v] is also the cheapest way from v
  // through the rest of R back to start.
  std::vector<std::size_t> order{start};
  std::uint32_t remaining = full;
  std::size_t current = start;
  double spent = 0.0;
  while (remaining != 0) {
    std::size_t chosen = m;
    for (std::size_t v = 0; v < m && chosen == m; ++v) {
      if (!(remaining >> v & 1U)) continue;
      const double step = weights[current][others[v]];
      if (spent + step + at(remaining, v) <= optimum + slack) chosen = v;
    }
    if (chosen == m) throw Error("Hamiltonian cycle reconstruction failed");
    spent += weights[current][others[chosen]];
    current = others[chosen];
    order.push_back(current);
    remaining &= ~(std::uint32_t{1} << chosen);
  }

  if (weights[start][order.back()] < weights[start][order[1]]) {
    std::reverse(order.begin() + 1, order.end());
  }
  return order;
}

}  // namespace qnlp::corpus
