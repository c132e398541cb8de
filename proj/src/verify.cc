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

#include "hyperoct/verify.h"

#include <exception>
#include <functional>

#include "hyperoct/errors.h"
#include "hyperoct/lambda_b.h"
#include "hyperoct/patterns.h"
#include "hyperoct/reduced_words.h"

namespace hyperoct {
namespace {

CheckResult Run(std::string name, int n, const std::function<std::string()>& body) {
  CheckResult result{std::move(name), n, false, ""};
  try {
    result.detail = body();
    result.passed = result.detail.empty();
  } catch (const std::exception& e) {
    result.detail = e.what();
  }
  return result;
}

std::string Compare(const Rational& got, const Rational& want) {
  if (got == want) return "";
  return "got " + ToString(got) + ", expected " + ToString(want);
}

std::string CheckCTerms(int n, const ShiftedHookFn& hook) {
  if (!VerifyDougallConsequence(n)) return "C_k sum identities fail";
  for (int k = 0; k + 1 <= n - 2; ++k) {
    if (CTerm(n, k + 1) / CTerm(n, k) != CTermRatio(n, k)) {
      return "ratio formula fails at k = " + std::to_string(k);
    }
  }
  const long n2 = static_cast<long>(n) * n;
  const BigInt longest = CountSytShifted(LongestElementShape(n), hook);
  const Rational scale = 6 * (n2 - 2) * Rational(Binomial(n2, 2));
  for (int k = 1; k <= n - 2; ++k) {
    const Rational from_hooks =
        scale * Rational(CountSytShifted(WkShape(n, k), hook), longest);
    if (from_hooks != CTerm(n, k)) {
      return "C_" + std::to_string(k) + " = " + ToString(CTerm(n, k)) +
             " but hook ratio gives " + ToString(from_hooks);
    }
  }
  return "";
}

std::string CheckVexillaryOracle(int n, const ShiftedHookFn& hook) {
  int checked = 0;
  for (const SignedPermutation& w : AllElements(n)) {
    if (!IsVexillaryTypeB(w)) continue;
    ++checked;
    const BigInt words = CountReducedWords(w, n);
    const BigInt tableaux = CountSytShifted(LambdaB(w), hook);
    if (words != tableaux) {
      return w.ToString() + ": #R = " + words.str() + ", f = " + tableaux.str();
    }
  }
  return checked > 0 ? "" : "no vexillary elements";
}

}  // namespace

std::vector<CheckResult> RunVerification(const VerifyOptions& options) {
  std::vector<CheckResult> results;
  for (int n = options.min_n; n <= options.max_n; ++n) {
    for (Statistic s : {Statistic::kYangBaxter, Statistic::kZeroOne}) {
      const int min_n = s == Statistic::kYangBaxter ? 3 : 2;
      if (n < min_n) continue;
      const std::string prefix = std::string(StatisticName(s)) + ".";
      const Rational want = ClosedForm(n, s);
      if (n * n <= options.enumeration_limit) {
        results.push_back(Run(prefix + "exhaustive", n, [&] {
          return Compare(ExpectationExhaustive(n, s, options.enumeration_limit).value,
                         want);
        }));
      }
      if (n <= options.dp_budget) {
        results.push_back(Run(prefix + "dp_counts", n, [&] {
          return Compare(ExpectationViaCounts(n, s, options.dp_budget).value, want);
        }));
      }
      if (n <= kMaxHookRank) {
        results.push_back(Run(prefix + "hook_counts", n, [&] {
          return Compare(
              ExpectationViaHooks(n, s, kMaxHookRank, options.hook).value, want);
        }));
      }
    }
    if (n >= 3) {
      results.push_back(Run("c_terms", n, [&] { return CheckCTerms(n, options.hook); }));
    }
    if (n <= kMaxVexillaryOracleRank && n <= options.dp_budget) {
      results.push_back(Run("vexillary_oracle", n, [&] {
        return CheckVexillaryOracle(n, options.hook);
      }));
    }
    if (n >= 3 && n <= options.dp_budget) {
      results.push_back(Run("type_a", n, [&] {
        return Compare(ExpectationYbTypeA(n, options.dp_budget), Rational(1));
      }));
    }
  }
  return results;
}

bool AllPassed(const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    if (!r.passed) return false;
  }
  return true;
}

}  // namespace hyperoct
