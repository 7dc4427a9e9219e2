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

#include "qnlp/corpus/basis.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "qnlp/common/errors.h"
#include "qnlp/corpus/projection.h"

namespace qnlp::corpus {
namespace {

TokenOccurrence occ(std::string text, Tag tag, std::vector<std::size_t> pos) {
  return TokenOccurrence{std::move(text), tag, std::move(pos)};
}

// Independent reduction over all |pa - pb| pairs.
double enumerate_pairs(const TokenOccurrence& a, const TokenOccurrence& b,
                       Reducer r) {
  std::vector<double> d;
  for (std::size_t pa : a.positions) {
    for (std::size_t pb : b.positions) {
      d.push_back(std::abs(static_cast<double>(pa) - static_cast<double>(pb)));
    }
  }
  std::sort(d.begin(), d.end());
  if (r == Reducer::kMin) return d.front();
  if (r == Reducer::kMean) {
    double s = 0;
    for (double x : d) s += x;
    return s / d.size();
  }
  return d.size() % 2 ? d[d.size() / 2]
                      : (d[d.size() / 2 - 1] + d[d.size() / 2]) / 2;
}

TEST(PairwiseDistance, Examples) {
  EXPECT_EQ(pairwise_token_distance(occ("a", Tag::kNoun, {2, 10}),
                                    occ("b", Tag::kNoun, {4})),
            2.0);
  EXPECT_EQ(pairwise_token_distance(occ("a", Tag::kNoun, {1}),
                                    occ("b", Tag::kNoun, {5})),
            4.0);
  // Pairs (1,5) (1,6) (9,5) (9,6) give 4, 5, 4, 3.
  const auto a = occ("a", Tag::kNoun, {1, 9});
  const auto b = occ("b", Tag::kNoun, {5, 6});
  EXPECT_DOUBLE_EQ(pairwise_token_distance(a, b, Reducer::kMean), 4.0);
  EXPECT_DOUBLE_EQ(pairwise_token_distance(a, b, Reducer::kMedian), 4.0);
  EXPECT_DOUBLE_EQ(pairwise_token_distance(a, b, Reducer::kMin), 3.0);
}

TEST(PairwiseDistance, MatchesEnumerationOnRandomPositions) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 200; ++t) {
    std::set<std::size_t> used;
    auto draw = [&](std::size_t count) {
      std::vector<std::size_t> p;
      while (p.size() < count) {
        const std::size_t v = rng() % 500;
        if (used.insert(v).second) p.push_back(v);
      }
      std::sort(p.begin(), p.end());
      return p;
    };
    const auto a = occ("a", Tag::kNoun, draw(1 + rng() % 7));
    const auto b = occ("b", Tag::kNoun, draw(1 + rng() % 7));
    for (Reducer r : {Reducer::kMin, Reducer::kMean, Reducer::kMedian}) {
      EXPECT_DOUBLE_EQ(pairwise_token_distance(a, b, r), enumerate_pairs(a, b, r));
      EXPECT_DOUBLE_EQ(pairwise_token_distance(a, b, r),
                       pairwise_token_distance(b, a, r));
    }
  }
}

TEST(PairwiseDistance, EmptyPositionsRejected) {
  EXPECT_THROW(pairwise_token_distance(occ("a", Tag::kNoun, {}),
                                       occ("b", Tag::kNoun, {1})),
               InvalidArgument);
}

TEST(Reducer, NamesRoundTrip) {
  for (Reducer r : {Reducer::kMin, Reducer::kMean, Reducer::kMedian}) {
    EXPECT_EQ(parse_reducer(reducer_name(r)), r);
  }
  EXPECT_THROW(parse_reducer("max"), InvalidArgument);
}

TEST(SelectBasis, TieBrokenAlphabetically) {
  const std::vector<TokenOccurrence> occs = {
      occ("dog", Tag::kNoun, {0, 4, 8}), occ("cat", Tag::kNoun, {1, 5}),
      occ("bat", Tag::kNoun, {2, 6}), occ("ant", Tag::kNoun, {3})};
  const BasisSelection s = select_basis(occs, Tag::kNoun, 2);
  EXPECT_EQ(s.tokens, (std::vector<std::string>{"dog", "bat"}));
  EXPECT_FALSE(s.short_of_candidates);
}

TEST(SelectBasis, ShortOfCandidates) {
  const std::vector<TokenOccurrence> occs = {occ("dog", Tag::kNoun, {0}),
                                             occ("the", Tag::kStopword, {1, 2})};
  const BasisSelection s = select_basis(occs, Tag::kNoun, 3);
  EXPECT_EQ(s.tokens, (std::vector<std::string>{"dog"}));
  EXPECT_TRUE(s.short_of_candidates);
}

TEST(SelectBasis, ClassFilterAndNounVariantsMerge) {
  const std::vector<TokenOccurrence> occs = {
      occ("run", Tag::kVerb, {0, 1, 2, 3}), occ("cat", Tag::kSubjectNoun, {4}),
      occ("cat", Tag::kObjectNoun, {5}), occ("dog", Tag::kNoun, {6})};
  EXPECT_EQ(select_basis(occs, Tag::kNoun, 1).tokens,
            (std::vector<std::string>{"cat"}));
  EXPECT_EQ(select_basis(occs, Tag::kVerb, 1).tokens,
            (std::vector<std::string>{"run"}));
  EXPECT_TRUE(select_basis(occs, Tag::kStopword, 1).tokens.empty());
}

TEST(AssignCodes, CompassExample) {
  const BasisSet b =
      assign_codes({"up", "left", "down", "right"}, generate_cyclic_code(2));
  EXPECT_EQ(b.codeword("up").to_string(), "00");
  EXPECT_EQ(b.codeword("left").to_string(), "01");
  EXPECT_EQ(b.codeword("down").to_string(), "11");
  EXPECT_EQ(b.codeword("right").to_string(), "10");
  EXPECT_EQ(b.token_for(Pattern::parse("11")), "down");
}

TEST(AssignCodes, NounOrdering) {
  const std::vector<std::string> order = {"head", "turtle", "hatter", "king",
                                          "queen", "time", "thing", "alice"};
  const std::vector<std::string> codes = {"0000", "0001", "0011", "0111",
                                          "1111", "1110", "1100", "1000"};
  const BasisSet b = assign_codes(order, generate_cyclic_code(4));
  for (std::size_t i = 0; i < order.size(); ++i) {
    EXPECT_EQ(b.codeword(order[i]).to_string(), codes[i]);
  }
}

TEST(AssignCodes, SingleTokenAndErrors) {
  const BasisSet one = assign_codes({"x"}, generate_cyclic_code(code_width_for(1)));
  EXPECT_EQ(one.codeword("x").value(), 0u);
  EXPECT_THROW(assign_codes({"a", "b", "c"}, generate_cyclic_code(1)),
               CapacityError);
  EXPECT_THROW(assign_codes({"a", "a"}, generate_cyclic_code(1)),
               InvalidArgument);
  try {
    one.codeword("y");
    FAIL() << "expected ResolutionError";
  } catch (const ResolutionError& e) {
    EXPECT_NE(std::string(e.what()).find("x"), std::string::npos);
  }
}

TEST(AssignCodes, WidthFor) {
  EXPECT_EQ(code_width_for(0), 1u);
  EXPECT_EQ(code_width_for(1), 1u);
  EXPECT_EQ(code_width_for(4), 2u);
  EXPECT_EQ(code_width_for(5), 3u);
  EXPECT_EQ(code_width_for(8), 4u);
}

// Tokens laid out along a line: the cheapest cycle walks the line out and
// back, so line neighbours end up with Hamming-adjacent codes.
TEST(BuildBasis, CycleOrderKeepsNeighboursAdjacent) {
  const std::vector<TokenOccurrence> occs = {
      occ("a", Tag::kNoun, {0, 100, 200}), occ("b", Tag::kNoun, {10}),
      occ("c", Tag::kNoun, {20}), occ("d", Tag::kNoun, {30})};
  const BasisSet b = build_basis(occs, {"a", "b", "c", "d"}, Tag::kNoun,
                                 Reducer::kMin);
  EXPECT_EQ(b.tokens().front(), "a");
  EXPECT_EQ(b.width(), 2u);
  EXPECT_EQ(hamming_distance(b.codeword("b"), b.codeword("c")), 1);
  EXPECT_EQ(hamming_distance(b.codeword("c"), b.codeword("d")), 1);
  EXPECT_EQ(b.tokens()[1], "b");
}

TEST(Projection, MapsWithinCutoff) {
  const std::vector<TokenOccurrence> occs = {
      occ("adult", Tag::kNoun, {0}), occ("child", Tag::kNoun, {20}),
      occ("john", Tag::kNoun, {2}),  occ("kid", Tag::kNoun, {18, 40}),
      occ("far", Tag::kNoun, {60}),  occ("sit", Tag::kVerb, {1})};
  const BasisSet basis = assign_codes({"adult", "child"}, generate_cyclic_code(1));
  const ProjectionMap m = project_tokens(occs, basis, Tag::kNoun, 3);
  EXPECT_EQ(m["adult"], (std::set<std::string>{"adult"}));
  EXPECT_EQ(m["child"], (std::set<std::string>{"child"}));
  EXPECT_EQ(m["john"], (std::set<std::string>{"adult"}));
  EXPECT_EQ(m["kid"], (std::set<std::string>{"child"}));
  EXPECT_TRUE(m["far"].empty());
  EXPECT_TRUE(m["sit"].empty());
  const ProjectionMap wide = project_tokens(occs, basis, Tag::kNoun, 18);
  EXPECT_EQ(wide["john"], (std::set<std::string>{"adult", "child"}));
  EXPECT_THROW(project_tokens(occs, basis, Tag::kNoun, 0.5), InvalidArgument);
}

TEST(Projection, MonotoneInCutoff) {
  std::mt19937_64 rng(31);
  std::vector<TokenOccurrence> occs;
  std::vector<std::size_t> slots(300);
  std::iota(slots.begin(), slots.end(), 0);
  std::shuffle(slots.begin(), slots.end(), rng);
  std::size_t next = 0;
  for (int t = 0; t < 30; ++t) {
    std::vector<std::size_t> p(slots.begin() + next, slots.begin() + next + 5);
    next += 5;
    std::sort(p.begin(), p.end());
    occs.push_back(occ("t" + std::to_string(t), Tag::kNoun, p));
  }
  const BasisSet basis =
      assign_codes({"t0", "t1", "t2", "t3"}, generate_cyclic_code(2));
  ProjectionMap prev = project_tokens(occs, basis, Tag::kNoun, 1);
  for (double c = 2; c <= 40; ++c) {
    const ProjectionMap cur = project_tokens(occs, basis, Tag::kNoun, c);
    for (const auto& [token, targets] : prev.entries()) {
      for (const std::string& t : targets) EXPECT_TRUE(cur[token].count(t));
    }
    for (const std::string& b : basis.tokens()) {
      EXPECT_EQ(cur[b], (std::set<std::string>{b}));
    }
    prev = cur;
  }
}

}  // namespace
}  // namespace qnlp::corpus
