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

#include <stdexcept>
#include <vector>

#include "hyperoct/errors.h"
#include "hyperoct/lambda_b.h"
#include "json.hpp"

namespace hyperoct {
namespace {

// lo * (lo + 2) * ... up to hi; 1 when hi < lo.
BigInt StepProduct(long lo, long hi) {
  BigInt p = 1;
  for (long x = lo; x <= hi; x += 2) p *= x;
  return p;
}

Rational Ratio(const BigInt& num, const BigInt& den) {
  return Rational(num, den);
}

// Number of (word, position) pairs in `words` carrying the statistic.
BigInt TotalFactors(const std::vector<ReducedWord>& words, Statistic s) {
  BigInt total = 0;
  for (const ReducedWord& w : words) {
    total += s == Statistic::kYangBaxter ? CountYangBaxterFactors(w.letters())
                                         : CountZeroOneFactors(w.letters());
  }
  return total;
}

SignedPermutation TypeALongest(int n) {
  std::vector<int> window;
  for (int v = n; v >= 1; --v) window.push_back(v);
  return SignedPermutation::FromWindow(std::move(window));
}

void CheckTypeARange(int n) {
  if (n < 3) {
    throw DomainError("type A expectation requires n >= 3, got n = " +
                      std::to_string(n));
  }
}

}  // namespace

std::string_view StatisticName(Statistic s) {
  return s == Statistic::kYangBaxter ? "yb" : "zero_one";
}

std::string_view MethodName(Method m) {
  switch (m) {
    case Method::kExhaustive:
      return "exhaustive";
    case Method::kDpCounts:
      return "dp_counts";
    case Method::kHookCounts:
      return "hook_counts";
    case Method::kClosedForm:
      return "closed_form";
  }
  return "";
}

Statistic ParseStatistic(std::string_view text) {
  if (text == "yb") return Statistic::kYangBaxter;
  if (text == "zero_one" || text == "01") return Statistic::kZeroOne;
  throw ParseError("bad token '" + std::string(text) +
                   "': statistic must be yb or zero_one");
}

Method ParseMethod(std::string_view text) {
  if (text == "exhaustive") return Method::kExhaustive;
  if (text == "dp_counts" || text == "counts") return Method::kDpCounts;
  if (text == "hook_counts" || text == "hooks") return Method::kHookCounts;
  if (text == "closed_form" || text == "closed") return Method::kClosedForm;
  throw ParseError("bad token '" + std::string(text) +
                   "': method must be exhaustive, dp_counts, hook_counts or "
                   "closed_form");
}

std::string ExpectationReport::ToJson() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["statistic"] = StatisticName(statistic);
  j["method"] = MethodName(method);
  j["numerator"] = Numerator(value).str();
  j["denominator"] = Denominator(value).str();
  j["total_words"] =
      total_words ? nlohmann::ordered_json(total_words->str()) : nullptr;
  return j.dump();
}

SignedPermutation WkElement(int n, int k) {
  if (k < 1 || k > n - 2) {
    throw DomainError("w_k requires 1 <= k <= n-2, got n = " +
                      std::to_string(n) + ", k = " + std::to_string(k));
  }
  SignedPermutation w = SignedPermutation::Longest(n);
  for (int i : {k, k + 1, k}) w = ApplyGeneratorLeft(i, w);
  return w;
}

SignedPermutation WPrimeElement(int n) {
  if (n < 2) {
    throw DomainError("w' requires n >= 2, got n = " + std::to_string(n));
  }
  SignedPermutation w = SignedPermutation::Longest(n);
  for (int i : {0, 1, 0, 1}) w = ApplyGeneratorLeft(i, w);
  return w;
}

void CheckValidityRange(int n, Statistic statistic) {
  const int min_n = statistic == Statistic::kYangBaxter ? 3 : 2;
  if (n < min_n) {
    throw DomainError(std::string(StatisticName(statistic)) +
                      " expectation holds for n >= " + std::to_string(min_n) +
                      ", got n = " + std::to_string(n));
  }
}

ExpectationReport ExpectationExhaustive(int n, Statistic statistic,
                                        int max_length) {
  CheckValidityRange(n, statistic);
  const auto words =
      EnumerateReducedWords(SignedPermutation::Longest(n), max_length);
  const BigInt total = words.size();
  return {n, statistic, Method::kExhaustive,
          Ratio(TotalFactors(words, statistic), total), total};
}

ExpectationReport ExpectationViaCounts(int n, Statistic statistic,
                                       int max_rank) {
  CheckValidityRange(n, statistic);
  const BigInt longest = CountReducedWords(SignedPermutation::Longest(n), max_rank);
  const long n2 = static_cast<long>(n) * n;
  Rational value;
  if (statistic == Statistic::kYangBaxter) {
    BigInt sum = 0;
    for (int k = 1; k <= n - 2; ++k) sum += CountReducedWords(WkElement(n, k), max_rank);
    value = Ratio(2 * (n2 - 2) * sum, longest);
  } else {
    value = Ratio(2 * (n2 - 3) * CountReducedWords(WPrimeElement(n), max_rank),
                  longest);
  }
  return {n, statistic, Method::kDpCounts, value, longest};
}

ExpectationReport ExpectationViaHooks(int n, Statistic statistic, int max_rank,
                                      const ShiftedHookFn& hook) {
  CheckValidityRange(n, statistic);
  if (n > max_rank) {
    throw BudgetExceeded("rank " + std::to_string(n) +
                         " exceeds hook-count bound " +
                         std::to_string(max_rank));
  }
  auto shape_of = [](const SignedPermutation& w, const ShiftedShape& closed) {
    ShiftedShape shape = LambdaB(w);
    if (shape != closed) {
      throw std::logic_error("shape of " + w.ToString() + " is " +
                             shape.ToString() + ", expected " +
                             closed.ToString());
    }
    return shape;
  };
  const BigInt longest = CountSytShifted(
      shape_of(SignedPermutation::Longest(n), LongestElementShape(n)), hook);
  const long n2 = static_cast<long>(n) * n;
  Rational value;
  if (statistic == Statistic::kYangBaxter) {
    BigInt sum = 0;
    for (int k = 1; k <= n - 2; ++k) {
      sum += CountSytShifted(shape_of(WkElement(n, k), WkShape(n, k)), hook);
    }
    value = Ratio(2 * (n2 - 2) * sum, longest);
  } else {
    // At n = 2 the shape of w' is empty and contributes f = 1.
    value = Ratio(2 * (n2 - 3) *
                      CountSytShifted(shape_of(WPrimeElement(n), WPrimeShape(n)),
                                      hook),
                  longest);
  }
  return {n, statistic, Method::kHookCounts, value, longest};
}

Rational ClosedForm(int n, Statistic statistic) {
  CheckValidityRange(n, statistic);
  if (statistic == Statistic::kYangBaxter) return Rational(2) - Rational(4, n);
  return Rational(2, static_cast<long>(n) * n - 2);
}

ExpectationReport ClosedFormReport(int n, Statistic statistic) {
  return {n, statistic, Method::kClosedForm, ClosedForm(n, statistic),
          std::nullopt};
}

ExpectationReport Expectation(int n, Statistic statistic, Method method,
                              int enumeration_limit, int dp_budget) {
  switch (method) {
    case Method::kExhaustive:
      return ExpectationExhaustive(n, statistic, enumeration_limit);
    case Method::kDpCounts:
      return ExpectationViaCounts(n, statistic, dp_budget);
    case Method::kHookCounts:
      return ExpectationViaHooks(n, statistic);
    case Method::kClosedForm:
      return ClosedFormReport(n, statistic);
  }
  throw std::logic_error("unknown method");
}

Rational CTerm(int n, int k) {
  if (n < 2 || k < 0 || k > n - 2) {
    throw DomainError("C_k requires 0 <= k <= n-2, got n = " +
                      std::to_string(n) + ", k = " + std::to_string(k));
  }
  const long N = n, K = k;
  Rational c = Ratio(StepProduct(3, 2 * K + 3), StepProduct(2, 2 * K));
  c *= Ratio(StepProduct(3, 2 * N - 2 * K - 1), StepProduct(2, 2 * N - 2 * K - 4));
  c *= Ratio(StepProduct(2 * K + 4, 4 * K + 4), StepProduct(2 * K + 1, 4 * K + 1));
  c *= Ratio(StepProduct(4 * K + 8, 2 * N + 2 * K + 2),
             StepProduct(4 * K + 5, 2 * N + 2 * K - 1));
  return c;
}

Rational CTermRatio(int n, int k) {
  if (k < 0 || k > n - 3) {
    throw DomainError("C_{k+1}/C_k requires 0 <= k <= n-3, got n = " +
                      std::to_string(n) + ", k = " + std::to_string(k));
  }
  const long N = n, K = k;
  BigInt num = BigInt(2 * K + 3) * (4 * K + 7) * (2 * K + 1) * (N - K - 2) *
               (N + K + 2);
  BigInt den = BigInt(4 * K + 3) * (K + 2) * (2 * N + 2 * K + 1) *
               (2 * N - 2 * K - 1) * (K + 1);
  return Ratio(num, den);
}

bool VerifyDougallConsequence(int n) {
  if (n < 3) {
    throw DomainError("C_k identities require n >= 3, got n = " +
                      std::to_string(n));
  }
  const long N = n;
  Rational sum = 0;
  for (int k = 1; k <= n - 2; ++k) sum += CTerm(n, k);
  const Rational expected_sum = 3 * N * (N * N - 1) * (N - 2);
  const Rational expectation =
      sum / (3 * Rational(Binomial(N * N, 2)));
  return CTerm(n, 0) == 6 * N * (N * N - 1) && sum == expected_sum &&
         sum == CTerm(n, 0) * (Rational(N, 2) - 1) &&
         expectation == Rational(2) - Rational(4, n);
}

Rational ExpectationYbTypeAExhaustive(int n) {
  CheckTypeARange(n);
  const SignedPermutation w0 = TypeALongest(n);
  const auto words = EnumerateReducedWords(w0, Length(w0));
  return Ratio(TotalFactors(words, Statistic::kYangBaxter), words.size());
}

Rational ExpectationYbTypeAByCounts(int n, int max_rank) {
  CheckTypeARange(n);
  const SignedPermutation w0 = TypeALongest(n);
  const BigInt longest = CountReducedWords(w0, max_rank);
  BigInt sum = 0;
  for (int k = 1; k <= n - 2; ++k) {
    SignedPermutation w = w0;
    for (int i : {k, k + 1, k}) w = ApplyGeneratorLeft(i, w);
    sum += CountReducedWords(w, max_rank);
  }
  const long positions = static_cast<long>(n) * (n - 1) / 2 - 2;
  return Ratio(2 * positions * sum, longest);
}

Rational ExpectationYbTypeA(int n, int max_rank) {
  CheckTypeARange(n);
  if (n > max_rank) {
    throw BudgetExceeded("rank " + std::to_string(n) + " exceeds dp budget " +
                         std::to_string(max_rank) + "; raise --dp-budget");
  }
  if (n <= 5) return ExpectationYbTypeAExhaustive(n);
  return ExpectationYbTypeAByCounts(n, max_rank);
}

}  // namespace hyperoct
