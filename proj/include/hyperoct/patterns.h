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

#ifndef HYPEROCT_PATTERNS_H_
#define HYPEROCT_PATTERNS_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hyperoct/signed_permutation.h"

namespace hyperoct {

// A signed permutation used as a pattern. Same window invariants as
// SignedPermutation.
class SignedPattern {
 public:
  static SignedPattern FromWindow(std::vector<int> window);
  static SignedPattern Parse(std::string_view text);

  int size() const { return static_cast<int>(window_.size()); }
  std::span<const int> window() const { return window_; }
  std::string ToString() const;

  friend bool operator==(const SignedPattern&, const SignedPattern&) = default;

 private:
  explicit SignedPattern(std::vector<int> window)
      : window_(std::move(window)) {}

  std::vector<int> window_;
};

// True if some subsequence w(i_1), ..., w(i_k) has the signs of p and the
// same relative order as p under the ordinary order on the integers. A
// pattern longer than w is simply not contained.
bool ContainsSignedPattern(const SignedPermutation& w, const SignedPattern& p);

// The nine forbidden patterns of type-B vexillarity, in table order.
std::span<const SignedPattern> TypeBVexillaryPatterns();

// First forbidden pattern (table order) contained in w, if any.
std::optional<SignedPattern> FindVexillaryObstruction(
    const SignedPermutation& w);

bool IsVexillaryTypeB(const SignedPermutation& w);

}  // namespace hyperoct

#endif  // HYPEROCT_PATTERNS_H_
