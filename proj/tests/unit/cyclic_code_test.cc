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

#include "qnlp/corpus/cyclic_code.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>
#include <vector>

#include "qnlp/common/errors.h"

namespace qnlp::corpus {
namespace {

std::vector<std::string> strings(const CyclicCode& c) {
  std::vector<std::string> out;
  for (const Pattern& p : c.codewords()) out.push_back(p.to_string());
  return out;
}

TEST(CyclicCode, PrintedSequences) {
  EXPECT_EQ(strings(generate_cyclic_code(2)),
            (std::vector<std::string>{"00", "01", "11", "10"}));
  EXPECT_EQ(strings(generate_cyclic_code(4)),
            (std::vector<std::string>{"0000", "0001", "0011", "0111", "1111",
                                      "1110", "1100", "1000"}));
}

TEST(CyclicCode, WidthThree) {
  EXPECT_EQ(strings(generate_cyclic_code(3)),
            (std::vector<std::string>{"000", "001", "011", "111", "110", "100"}));
}

TEST(CyclicCode, WidthOne) {
  EXPECT_EQ(strings(generate_cyclic_code(1)),
            (std::vector<std::string>{"0", "1"}));
}

TEST(CyclicCode, DistanceLawHoldsExhaustively) {
  for (unsigned n = 1; n <= 12; ++n) {
    const CyclicCode code = generate_cyclic_code(n);
    ASSERT_EQ(code.size(), 2 * n);
    for (std::size_t i = 0; i < code.size(); ++i) {
      for (std::size_t j = 0; j < code.size(); ++j) {
        const long diff = std::labs(static_cast<long>(i) - static_cast<long>(j));
        const long expect = std::min<long>(diff, 2 * n - diff);
        ASSERT_EQ(std::popcount(code[i].value() ^ code[j].value()), expect)
            << "n=" << n << " i=" << i << " j=" << j;
        ASSERT_EQ(static_cast<long>(code.cyclic_distance(i, j)), expect);
      }
    }
  }
}

TEST(CyclicCode, IndexOf) {
  const CyclicCode code = generate_cyclic_code(4);
  EXPECT_EQ(code.index_of(Pattern::parse("1110")), 5u);
  EXPECT_FALSE(code.index_of(Pattern::parse("0101")).has_value());
  EXPECT_FALSE(code.index_of(Pattern::parse("000")).has_value());
}

TEST(CyclicCode, Errors) {
  EXPECT_THROW(generate_cyclic_code(0), InvalidArgument);
  EXPECT_THROW(generate_cyclic_code(64), CapacityError);
  EXPECT_THROW(CyclicCode(2, {Pattern(0, 2)}), InvalidArgument);
}

}  // namespace
}  // namespace qnlp::corpus
