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

#include "hyperoct/expectations.h"

#include <vector>

#include "gtest/gtest.h"
#include "hyperoct/errors.h"
#include "hyperoct/lambda_b.h"
#include "hyperoct/reduced_words.h"

namespace hyperoct {
namespace {

SignedPermutation P(std::vector<int> window) {
  return SignedPermutation::FromWindow(std::move(window));
}

// C_k as a quotient of step-2 products, computed with plain loops.
Rational CTermByLoops(int n, int k) {
  auto prod = [](long lo, long hi) {
    BigInt p = 1;
    for (long x = lo; x <= hi; x += 2) p *= x;
    return p;
  };
  Rational c = 1;
  c *= Rational(prod(3, 2 * k + 3), prod(2, 2 * k));
  c *= Rational(prod(3, 2 * n - 2 * k - 1), prod(2, 2 * n - 2 * k - 4));
  c *= Rational(prod(2 * k + 4, 4 * k + 4), prod(2 * k + 1, 4 * k + 1));
  c *= Rational(prod(4 * k + 8, 2 * n + 2 * k + 2), prod(4 * k + 5, 2 * n + 2 * k - 1));
  return c;
}

TEST(ExpectationsTest, ReductionElements) {
  EXPECT_EQ(WkElement(3, 1), P({-3, -2, -1}));
  EXPECT_EQ(WkElement(5, 2), P({-1, -4, -3, -2, -5}));
  EXPECT_EQ(WPrimeElement(3), P({1, 2, -3}));
  EXPECT_EQ(WPrimeElement(2), SignedPermutation::Identity(2));
  for (int n = 3; n <= 8; ++n) {
    for (int k = 1; k <= n - 2; ++k) EXPECT_EQ(Length(WkElement(n, k)), n * n - 3);
    EXPECT_EQ(Length(WPrimeElement(n)), n * n - 4);
  }
  EXPECT_THROW(WkElement(3, 2), DomainError);
  EXPECT_THROW(WkElement(3, 0), DomainError);
  EXPECT_THROW(WPrimeElement(1), DomainError);
}

TEST(ExpectationsTest, ClosedForms) {
  EXPECT_EQ(ClosedForm(3, Statistic::kYangBaxter), Rational(2, 3));
  EXPECT_EQ(ClosedForm(4, Statistic::kYangBaxter), Rational(1));
  EXPECT_EQ(ClosedForm(100, Statistic::kZeroOne), Rational(1, 4999));
  EXPECT_EQ(ClosedForm(2, Statistic::kZeroOne), Rational(1));
  EXPECT_THROW(ClosedForm(2, Statistic::kYangBaxter), DomainError);
  EXPECT_THROW(ClosedForm(1, Statistic::kZeroOne), DomainError);
}

TEST(ExpectationsTest, Exhaustive) {
  auto r = ExpectationExhaustive(3, Statistic::kYangBaxter);
  EXPECT_EQ(r.value, Rational(2, 3));
  EXPECT_EQ(*r.total_words, 42);
  EXPECT_EQ(ExpectationExhaustive(2, Statistic::kZeroOne).value, Rational(1));
  EXPECT_EQ(ExpectationExhaustive(3, Statistic::kZeroOne).value, Rational(2, 7));
  EXPECT_THROW(ExpectationExhaustive(5, Statistic::kZeroOne), BudgetExceeded);
  EXPECT_THROW(ExpectationExhaustive(2, Statistic::kYangBaxter), DomainError);
}

TEST(ExpectationsTest, ViaCounts) {
  EXPECT_EQ(CountReducedWords(WkElement(3, 1)), 2);
  EXPECT_EQ(CountReducedWords(WPrimeElement(3)), 1);
  EXPECT_EQ(CountReducedWords(WkElement(4, 1)) + CountReducedWords(WkElement(4, 2)), 858);
  EXPECT_EQ(ExpectationViaCounts(3, Statistic::kYangBaxter).value, Rational(2, 3));
  EXPECT_EQ(ExpectationViaCounts(3, Statistic::kZeroOne).value, Rational(2, 7));
  EXPECT_EQ(ExpectationViaCounts(4, Statistic::kYangBaxter).value, Rational(1));
  EXPECT_EQ(ExpectationViaCounts(5, Statistic::kZeroOne).value, Rational(2, 23));
  EXPECT_THROW(ExpectationViaCounts(8, Statistic::kZeroOne), BudgetExceeded);
}

TEST(ExpectationsTest, ViaHooks) {
  EXPECT_EQ(ExpectationViaHooks(8, Statistic::kYangBaxter).value, Rational(3, 2));
  EXPECT_EQ(ExpectationViaHooks(8, Statistic::kZeroOne).value, Rational(1, 31));
  EXPECT_EQ(ExpectationViaHooks(2, Statistic::kZeroOne).value, Rational(1));
  EXPECT_EQ(*ExpectationViaHooks(4, Statistic::kZeroOne).total_words, 24024);
  EXPECT_THROW(ExpectationViaHooks(51, Statistic::kZeroOne), BudgetExceeded);
}

// Counting the words that begin with the removed factor gives #R(w_k) and
// #R(w') directly.
TEST(ExpectationsTest, FactorPeelingMatchesCounts) {
  for (int n : {2, 3, 4}) {
    const auto words = EnumerateReducedWords(SignedPermutation::Longest(n));
    for (int k = 1; k <= n - 2; ++k) {
      int kk1k = 0, k1kk1 = 0;
      for (const auto& w : words) {
        const auto l = w.letters();
        kk1k += l[0] == k && l[1] == k + 1 && l[2] == k;
        k1kk1 += l[0] == k + 1 && l[1] == k && l[2] == k + 1;
      }
      EXPECT_EQ(kk1k, CountReducedWords(WkElement(n, k)));
      EXPECT_EQ(k1kk1, CountReducedWords(WkElement(n, k)));
    }
    int zero_one = 0, one_zero = 0;
    for (const auto& w : words) {
      zero_one += HasZeroOneFactorAt(w.letters(), 0) && w.letters()[0] == 0;
      one_zero += HasZeroOneFactorAt(w.letters(), 0) && w.letters()[0] == 1;
    }
    EXPECT_EQ(zero_one, CountReducedWords(WPrimeElement(n)));
    EXPECT_EQ(one_zero, CountReducedWords(WPrimeElement(n)));
  }
}

TEST(ExpectationsTest, CTermValues) {
  for (int n = 3; n <= 12; ++n) {
    EXPECT_EQ(CTerm(n, 0), Rational(6L * n * (n * n - 1)));
    for (int k = 0; k <= n - 2; ++k) EXPECT_EQ(CTerm(n, k), CTermByLoops(n, k));
  }
  EXPECT_EQ(CTerm(3, 1), Rational(72));
  EXPECT_EQ(CTerm(4, 1) / CTerm(4, 0), CTermRatio(4, 0));
  EXPECT_THROW(CTerm(3, 2), DomainError);
  EXPECT_THROW(CTerm(3, -1), DomainError);
  EXPECT_THROW(CTermRatio(3, 1), DomainError);
}

TEST(ExpectationsTest, CTermRatioFormula) {
  for (int n = 3; n <= 20; ++n) {
    for (int k = 0; k <= n - 3; ++k) {
      EXPECT_EQ(CTerm(n, k + 1) / CTerm(n, k), CTermRatio(n, k)) << n << "," << k;
    }
  }
}

// Each C_k equals 6(n^2-2) binom(n^2,2) f^{lambda(w_k)} / f^{lambda(w_0)}.
TEST(ExpectationsTest, CTermMatchesHookRatios) {
  for (int n = 3; n <= 8; ++n) {
    const long n2 = static_cast<long>(n) * n;
    const BigInt f0 = CountSytShifted(LambdaB(SignedPermutation::Longest(n)));
    for (int k = 1; k <= n - 2; ++k) {
      const BigInt fk = CountSytShifted(LambdaB(WkElement(n, k)));
      EXPECT_EQ(CTerm(n, k), 6 * (n2 - 2) * Rational(Binomial(n2, 2)) * Rational(fk, f0))
          << n << "," << k;
    }
  }
}

TEST(ExpectationsTest, DougallConsequence) {
  for (int n = 3; n <= 12; ++n) EXPECT_TRUE(VerifyDougallConsequence(n)) << n;
  Rational sum = 0;
  for (int k = 1; k <= 1; ++k) sum += CTerm(3, k);
  EXPECT_EQ(sum, Rational(72));
  EXPECT_EQ(sum / CTerm(3, 0), Rational(1, 2));
  EXPECT_THROW(VerifyDougallConsequence(2), DomainError);
}

TEST(ExpectationsTest, TypeA) {
  EXPECT_EQ(ExpectationYbTypeA(3), Rational(1));
  EXPECT_EQ(ExpectationYbTypeA(4), Rational(1));
  EXPECT_EQ(ExpectationYbTypeA(5), Rational(1));
  EXPECT_EQ(ExpectationYbTypeA(7), Rational(1));
  for (int n = 3; n <= 5; ++n) {
    EXPECT_EQ(ExpectationYbTypeAByCounts(n), ExpectationYbTypeAExhaustive(n));
  }
  EXPECT_THROW(ExpectationYbTypeA(2), DomainError);
  EXPECT_THROW(ExpectationYbTypeA(9), BudgetExceeded);
}

TEST(ExpectationsTest, ReportJson) {
  const auto r = ExpectationExhaustive(3, Statistic::kYangBaxter);
  EXPECT_EQ(r.ToJson(),
            R"({"n":3,"statistic":"yb","method":"exhaustive","numerator":"2",)"
            R"("denominator":"3","total_words":"42"})");
  EXPECT_EQ(ClosedFormReport(4, Statistic::kZeroOne).ToJson(),
            R"({"n":4,"statistic":"zero_one","method":"closed_form","numerator":"1",)"
            R"("denominator":"7","total_words":null})");
}

TEST(ExpectationsTest, NamesRoundTrip) {
  for (Statistic s : {Statistic::kYangBaxter, Statistic::kZeroOne}) {
    EXPECT_EQ(ParseStatistic(StatisticName(s)), s);
  }
  for (Method m : {Method::kExhaustive, Method::kDpCounts, Method::kHookCounts,
                   Method::kClosedForm}) {
    EXPECT_EQ(ParseMethod(MethodName(m)), m);
  }
  EXPECT_EQ(ParseMethod("hooks"), Method::kHookCounts);
  EXPECT_THROW(ParseStatistic("xy"), ParseError);
  EXPECT_THROW(ParseMethod("guess"), ParseError);
}

}  // namespace
}  // namespace hyperoct
