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

#ifndef HYPEROCT_REDUCED_WORDS_H_
#define HYPEROCT_REDUCED_WORDS_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hyperoct/exact.h"
#include "hyperoct/signed_permutation.h"

namespace hyperoct {

inline constexpr int kDefaultEnumerationLimit = 16;
inline constexpr int kDefaultDpBudget = 8;
// Keys pack five bits per window entry into 64 bits.
inline constexpr int kMaxDpRank = 12;

// A reduced decomposition i_1 ... i_l of some element of B_n, meaning
// w = s_{i_1} ... s_{i_l} with l = Length(w).
class ReducedWord {
 public:
  // Throws DomainError if a letter is out of range or the word is not
  // reduced.
  static ReducedWord Make(int rank, std::vector<int> letters);

  int rank() const { return rank_; }
  std::span<const int> letters() const { return letters_; }
  int size() const { return static_cast<int>(letters_.size()); }

  // The element this word spells.
  SignedPermutation Value() const;
  std::string ToString() const;

  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;
  friend auto operator<=>(const ReducedWord&, const ReducedWord&) = default;

 private:
  friend std::vector<ReducedWord> EnumerateReducedWords(
      const SignedPermutation& w, int max_length);
  friend ReducedWord Rotate(const ReducedWord& word);

  ReducedWord(int rank, std::vector<int> letters)
      : rank_(rank), letters_(std::move(letters)) {}

  int rank_;
  std::vector<int> letters_;
};

struct FactorStats {
  int yb_count = 0;
  int zero_one_count = 0;

  friend bool operator==(const FactorStats&, const FactorStats&) = default;
};

// Accepts "0,1,0,1" and, for rank <= 10, the digit string "0101". The empty
// string is the empty word. Letters are range-checked against rank.
std::vector<int> ParseWord(std::string_view text, int rank);

// Canonical comma-separated form; the empty word is "".
std::string FormatWord(std::span<const int> letters);

// s_{i_1} * ... * s_{i_l}, multiplied left to right starting at the identity.
SignedPermutation Evaluate(std::span<const int> letters, int rank);

bool IsReduced(std::span<const int> letters, int rank);

// R(w), sorted lexicographically. Throws BudgetExceeded when Length(w)
// exceeds max_length.
std::vector<ReducedWord> EnumerateReducedWords(
    const SignedPermutation& w, int max_length = kDefaultEnumerationLimit);

// |R(w)| by propagating path counts down the right weak order, one length
// level at a time. Throws BudgetExceeded when rank(w) > max_rank.
BigInt CountReducedWords(const SignedPermutation& w,
                         int max_rank = kDefaultDpBudget);

// i_1 i_2 ... i_N -> i_2 ... i_N i_1 on R(w_0). Throws DomainError if the
// input is not a reduced word of the longest element.
ReducedWord Rotate(const ReducedWord& word);

// Starting positions of j(j+1)j or (j+1)j(j+1) with j >= 1. Overlapping
// occurrences count separately.
int CountYangBaxterFactors(std::span<const int> letters);

// Starting positions of 0101 or 1010, overlaps included.
int CountZeroOneFactors(std::span<const int> letters);

FactorStats ComputeFactorStats(std::span<const int> letters);

// True if a Yang-Baxter factor on k, k+1 starts at position p (0-based).
bool HasYangBaxterFactorAt(std::span<const int> letters, size_t p, int k);
bool HasZeroOneFactorAt(std::span<const int> letters, size_t p);

}  // namespace hyperoct

#endif  // HYPEROCT_REDUCED_WORDS_H_
