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

#ifndef HYPEROCT_EXPECTATIONS_H_
#define HYPEROCT_EXPECTATIONS_H_

#include <optional>
#include <string>
#include <string_view>

#include "hyperoct/exact.h"
#include "hyperoct/reduced_words.h"
#include "hyperoct/shapes.h"
#include "hyperoct/signed_permutation.h"

namespace hyperoct {

// Factor statistic over R(w_0) in B_n.
enum class Statistic { kYangBaxter, kZeroOne };

enum class Method { kExhaustive, kDpCounts, kHookCounts, kClosedForm };

std::string_view StatisticName(Statistic s);  // "yb", "zero_one"
std::string_view MethodName(Method m);  // "exhaustive", "dp_counts", ...
// Throws ParseError. Accepts the names above; "01" and "counts"/"hooks"/
// "closed" as short forms.
Statistic ParseStatistic(std::string_view text);
Method ParseMethod(std::string_view text);

inline constexpr int kDefaultExpectationDpBudget = 7;
inline constexpr int kMaxHookRank = 50;

struct ExpectationReport {
  int n = 0;
  Statistic statistic = Statistic::kYangBaxter;
  Method method = Method::kClosedForm;
  Rational value;
  // |R(w_0)| when the method computes it.
  std::optional<BigInt> total_words;

  // {"n", "statistic", "method", "numerator", "denominator", "total_words"};
  // big integers are decimal strings, total_words may be null.
  std::string ToJson() const;
};

// w_k = s_k s_{k+1} s_k w_0, for 1 <= k <= n-2.
SignedPermutation WkElement(int n, int k);

// w' = (1, 2, -3, ..., -n) = s_0 s_1 s_0 s_1 w_0, for n >= 2.
SignedPermutation WPrimeElement(int n);

// Validity range: yb needs n >= 3, zero_one n >= 2. Throws
// DomainError naming the range.
void CheckValidityRange(int n, Statistic statistic);

// Averages the factor count over every word of R(w_0). The enumeration limit
// is on word length, so the default admits n <= 4.
ExpectationReport ExpectationExhaustive(
    int n, Statistic statistic, int max_length = kDefaultEnumerationLimit);

// Reduces to words starting with a fixed factor and counts the remainders
// by dynamic programming:
//   yb:       2(n^2-2) sum_k #R(w_k) / #R(w_0)
//   zero_one: 2(n^2-3) #R(w') / #R(w_0)
ExpectationReport ExpectationViaCounts(
    int n, Statistic statistic, int max_rank = kDefaultExpectationDpBudget);

// Same reduction with #R replaced by shifted tableau counts of the shapes
// produced by LambdaB. Throws std::logic_error if those shapes disagree with
// the closed shape formulas.
ExpectationReport ExpectationViaHooks(
    int n, Statistic statistic, int max_rank = kMaxHookRank,
    const ShiftedHookFn& hook = ShiftedHookLength);

// 2 - 4/n or 2/(n^2 - 2).
Rational ClosedForm(int n, Statistic statistic);

ExpectationReport ClosedFormReport(int n, Statistic statistic);

ExpectationReport Expectation(int n, Statistic statistic, Method method,
                              int enumeration_limit = kDefaultEnumerationLimit,
                              int dp_budget = kDefaultExpectationDpBudget);

// C_k as a product of four ratios of step-2 ascending products; a range
// whose upper end is below its lower end is an empty product. 0 <= k <= n-2.
Rational CTerm(int n, int k);

// C_{k+1} / C_k as the rational function in k, for 0 <= k <= n-3.
Rational CTermRatio(int n, int k);

// Checks sum_{k=1}^{n-2} C_k = 3n(n^2-1)(n-2) and that
// (1/3) binom(n^2, 2)^{-1} sum_k C_k = 2 - 4/n. Requires n >= 3.
bool VerifyDougallConsequence(int n);

// Expected Yang-Baxter count over R(n ... 1) in the symmetric group, which
// sits in B_n as the positive windows. Enumerates for n <= 5, otherwise
// reduces to the first three letters and counts with dynamic programming.
Rational ExpectationYbTypeA(int n, int max_rank = kDefaultDpBudget);

// The two routes ExpectationYbTypeA chooses between.
Rational ExpectationYbTypeAExhaustive(int n);
Rational ExpectationYbTypeAByCounts(int n, int max_rank = kDefaultDpBudget);

}  // namespace hyperoct

#endif  // HYPEROCT_EXPECTATIONS_H_
