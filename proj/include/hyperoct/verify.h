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

#ifndef HYPEROCT_VERIFY_H_
#define HYPEROCT_VERIFY_H_

#include <string>
#include <vector>

#include "hyperoct/expectations.h"
#include "hyperoct/shapes.h"

namespace hyperoct {

inline constexpr int kMaxVexillaryOracleRank = 5;

struct VerifyOptions {
  int min_n = 2;
  int max_n = 4;
  int enumeration_limit = kDefaultEnumerationLimit;
  int dp_budget = kDefaultExpectationDpBudget;
  // Swappable so a broken rule can be shown to fail.
  ShiftedHookFn hook = ShiftedHookLength;
};

struct CheckResult {
  std::string name;
  int n = 0;
  bool passed = false;
  // Empty on success; otherwise the mismatch or the exception text.
  std::string detail;
};

// Runs every identity that applies at each n in [min_n, max_n]:
//   <stat>.<method>      expectation by that method equals the closed form
//   c_terms              C_0 closed form, sum of C_k, ratio formula, and
//                        agreement with the hook-count ratios
//   vexillary_oracle     #R(w) = f^{lambda^B(w)} over vexillary w in B_n
//   type_a               the symmetric-group expectation equals 1
// Checks whose budget does not admit n are skipped, not failed.
std::vector<CheckResult> RunVerification(const VerifyOptions& options);

bool AllPassed(const std::vector<CheckResult>& results);

}  // namespace hyperoct

#endif  // HYPEROCT_VERIFY_H_
