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

#ifndef HYPEROCT_SIGNED_PERMUTATION_H_
#define HYPEROCT_SIGNED_PERMUTATION_H_

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hyperoct {

// An element of the hyperoctahedral group B_n, stored by its window
// w(1), ..., w(n). The values on negative arguments follow from
// w(-i) = -w(i) and are never stored.
//
// Generators are indexed 0..n-1: s_0 negates, s_i (i > 0) transposes i and
// i+1. Maps act on the left, so w * s_i acts on positions and s_i * w acts on
// values.
class SignedPermutation {
 public:
  static SignedPermutation Identity(int n);
  // (-1, -2, ..., -n).
  static SignedPermutation Longest(int n);
  // Throws DomainError unless the absolute values are exactly {1, ..., n}.
  static SignedPermutation FromWindow(std::vector<int> window);
  // Comma-separated signed integers, e.g. "2,-1,-4,3". Throws ParseError
  // naming the offending token.
  static SignedPermutation Parse(std::string_view text);

  int rank() const { return static_cast<int>(window_.size()); }
  std::span<const int> window() const { return window_; }

  // w(i) for i in {-n, ..., -1, 1, ..., n}.
  int operator()(int i) const {
    return i > 0 ? window_[i - 1] : -window_[-i - 1];
  }

  bool IsIdentity() const;
  std::string ToString() const;

  friend bool operator==(const SignedPermutation&,
                         const SignedPermutation&) = default;
  friend auto operator<=>(const SignedPermutation&,
                          const SignedPermutation&) = default;

 private:
  explicit SignedPermutation(std::vector<int> window)
      : window_(std::move(window)) {}

  std::vector<int> window_;
};

// The generator s_i as a group element of rank n.
SignedPermutation Generator(int n, int i);

// s_i * w: moves the values of absolute value i and i+1 (or flips the sign of
// the value of absolute value 1 when i = 0).
SignedPermutation ApplyGeneratorLeft(int i, const SignedPermutation& w);

// w * s_i: swaps positions i and i+1 (or negates w(1) when i = 0).
SignedPermutation ApplyGeneratorRight(const SignedPermutation& w, int i);

// (a * b)(i) = a(b(i)). Throws DomainError on rank mismatch.
SignedPermutation Multiply(const SignedPermutation& a,
                           const SignedPermutation& b);

SignedPermutation Inverse(const SignedPermutation& w);

// Coxeter length: #{i < j : w(i) > w(j)} + sum of |w(i)| over negative w(i).
int Length(const SignedPermutation& w);

// Ascending list of i with Length(w * s_i) < Length(w).
std::vector<int> RightDescents(const SignedPermutation& w);

// All 2^n n! elements, sorted by window. Throws BudgetExceeded for n > 8.
std::vector<SignedPermutation> AllElements(int n);

// Checks that i is a generator index of B_n.
void CheckGenerator(int n, int i);

}  // namespace hyperoct

#endif  // HYPEROCT_SIGNED_PERMUTATION_H_
