// Copyright 2026 The hyperoct Authors.
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

#include "hyperoct/patterns.h"

#include <vector>

#include "gtest/gtest.h"
#include "hyperoct/errors.h"
#include "hyperoct/expectations.h"
#include "oracles.h"

namespace hyperoct {
namespace {

SignedPermutation P(std::vector<int> window) {
  return SignedPermutation::FromWindow(std::move(window));
}

SignedPattern Pat(std::vector<int> window) {
  return SignedPattern::FromWindow(std::move(window));
}

TEST(PatternsTest, SignsMustMatch) {
  EXPECT_FALSE(ContainsSignedPattern(P({-1, -2}), Pat({2, 1})));
  EXPECT_TRUE(ContainsSignedPattern(P({2, -1, 4, 3}), Pat({2, 1})));
  EXPECT_FALSE(ContainsSignedPattern(SignedPermutation::Identity(5), Pat({2, 1})));
  EXPECT_TRUE(ContainsSignedPattern(P({-2, -1}), Pat({-2, -1})));
  EXPECT_FALSE(ContainsSignedPattern(P({-1, -2}), Pat({-2, -1})));
}

TEST(PatternsTest, LongerPatternIsNotContained) {
  EXPECT_FALSE(ContainsSignedPattern(P({2, 1}), Pat({-3, 2, -1})));
}

TEST(PatternsTest, PatternParsing) {
  EXPECT_EQ(SignedPattern::Parse("-3,2,-1"), Pat({-3, 2, -1}));
  EXPECT_EQ(Pat({-3, 2, -1}).ToString(), "-3,2,-1");
  EXPECT_THROW(SignedPattern::Parse("3,2"), ParseError);
  EXPECT_THROW(Pat({2, 2}), DomainError);
}

TEST(PatternsTest, VexillaryTableHasNinePatterns) {
  const auto table = TypeBVexillaryPatterns();
  ASSERT_EQ(table.size(), 9u);
  EXPECT_EQ(table[0], Pat({2, 1}));
  EXPECT_EQ(table[1], Pat({-3, 2, -1}));
  EXPECT_EQ(table[8], Pat({-4, -1, -2, 3}));
}

TEST(PatternsTest, WorkedExamples) {
  EXPECT_TRUE(IsVexillaryTypeB(P({2, -1, -4, 3})));
  EXPECT_FALSE(IsVexillaryTypeB(P({2, -1, 4, 3})));
  EXPECT_EQ(FindVexillaryObstruction(P({2, -1, 4, 3})), Pat({2, 1}));
  for (int n = 1; n <= 8; ++n) {
    EXPECT_TRUE(IsVexillaryTypeB(SignedPermutation::Longest(n)));
    EXPECT_TRUE(IsVexillaryTypeB(SignedPermutation::Identity(n)));
  }
}

TEST(PatternsTest, ReductionElementsAreVexillary) {
  for (int n = 2; n <= 8; ++n) {
    EXPECT_TRUE(IsVexillaryTypeB(WPrimeElement(n))) << n;
    for (int k = 1; k <= n - 2; ++k) {
      EXPECT_TRUE(IsVexillaryTypeB(WkElement(n, k))) << n << "," << k;
    }
  }
}

TEST(PatternsTest, AgreesWithNaiveScanOnB4) {
  for (const auto& w : AllElements(4)) {
    const oracle::Window window(w.window().begin(), w.window().end());
    for (const auto& p : TypeBVexillaryPatterns()) {
      const oracle::Window pw(p.window().begin(), p.window().end());
      EXPECT_EQ(ContainsSignedPattern(w, p), oracle::NaiveContains(window, pw))
          << w.ToString() << " / " << p.ToString();
    }
  }
}

TEST(PatternsTest, VexillaryCounts) {
  int b3 = 0, b4 = 0;
  for (const auto& w : AllElements(3)) b3 += IsVexillaryTypeB(w);
  for (const auto& w : AllElements(4)) b4 += IsVexillaryTypeB(w);
  EXPECT_EQ(b3, 31);
  EXPECT_EQ(b4, 150);
}

// Appending a new largest or smallest value keeps any occurrence.
TEST(PatternsTest, ContainmentSurvivesExtension) {
  for (const auto& w : AllElements(3)) {
    for (const auto& p : TypeBVexillaryPatterns()) {
      if (!ContainsSignedPattern(w, p)) continue;
      std::vector<int> up(w.window().begin(), w.window().end());
      up.push_back(4);
      std::vector<int> down(w.window().begin(), w.window().end());
      down.insert(down.begin(), -4);
      EXPECT_TRUE(ContainsSignedPattern(P(up), p));
      EXPECT_TRUE(ContainsSignedPattern(P(down), p));
    }
  }
}

}  // namespace
}  // namespace hyperoct
