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

#include "hyperoct/reduced_words.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <unordered_map>

#include "hyperoct/errors.h"

namespace hyperoct {
namespace {

// Window packed five bits per entry, value offset by 16.
using Key = uint64_t;

Key Pack(std::span<const int> window) {
  Key key = 0;
  for (size_t i = 0; i < window.size(); ++i) {
    key |= static_cast<Key>(window[i] + 16) << (5 * i);
  }
  return key;
}

int Entry(Key key, int i) { return static_cast<int>((key >> (5 * i)) & 31) - 16; }

Key SetEntry(Key key, int i, int value) {
  key &= ~(Key{31} << (5 * i));
  return key | (static_cast<Key>(value + 16) << (5 * i));
}

Key RightMultiply(Key key, int i) {
  if (i == 0) return SetEntry(key, 0, -Entry(key, 0));
  const int a = Entry(key, i - 1);
  const int b = Entry(key, i);
  return SetEntry(SetEntry(key, i - 1, b), i, a);
}

bool IsRightDescent(Key key, int i) {
  return i == 0 ? Entry(key, 0) < 0 : Entry(key, i - 1) > Entry(key, i);
}

void CollectWords(std::vector<int>& window, int remaining,
                  std::vector<int>& suffix,
                  std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.emplace_back(suffix.rbegin(), suffix.rend());
    return;
  }
  const int n = static_cast<int>(window.size());
  for (int i = 0; i < n; ++i) {
    const bool descent =
        i == 0 ? window[0] < 0 : window[i - 1] > window[i];
    if (!descent) continue;
    if (i == 0) {
      window[0] = -window[0];
    } else {
      std::swap(window[i - 1], window[i]);
    }
    suffix.push_back(i);
    CollectWords(window, remaining - 1, suffix, out);
    suffix.pop_back();
    if (i == 0) {
      window[0] = -window[0];
    } else {
      std::swap(window[i - 1], window[i]);
    }
  }
}

bool MatchesYangBaxter(std::span<const int> w, size_t p, int k) {
  const int a = w[p], b = w[p + 1], c = w[p + 2];
  return a == c && ((a == k && b == k + 1) || (a == k + 1 && b == k));
}

}  // namespace

ReducedWord ReducedWord::Make(int rank, std::vector<int> letters) {
  if (!IsReduced(letters, rank)) {
    throw DomainError("word " + FormatWord(letters) +
                      " is not reduced in B_" + std::to_string(rank));
  }
  return ReducedWord(rank, std::move(letters));
}

SignedPermutation ReducedWord::Value() const {
  return Evaluate(letters_, rank_);
}

std::string ReducedWord::ToString() const { return FormatWord(letters_); }

std::vector<int> ParseWord(std::string_view text, int rank) {
  std::vector<std::string_view> tokens;
  if (text.find(',') != std::string_view::npos) {
    size_t start = 0;
    while (true) {
      size_t comma = text.find(',', start);
      tokens.push_back(text.substr(start, comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  } else if (!text.empty() && rank <= 10) {
    for (size_t i = 0; i < text.size(); ++i) tokens.push_back(text.substr(i, 1));
  } else if (!text.empty()) {
    tokens.push_back(text);
  }
  std::vector<int> letters;
  for (std::string_view token : tokens) {
    int value = -1;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() ||
        ptr != token.data() + token.size()) {
      throw ParseError("bad token '" + std::string(token) + "' in word");
    }
    if (value < 0 || value >= rank) {
      throw ParseError("bad token '" + std::string(token) +
                       "': letter out of range [0, " +
                       std::to_string(rank - 1) + "]");
    }
    letters.push_back(value);
  }
  return letters;
}

std::string FormatWord(std::span<const int> letters) {
  std::string out;
  for (size_t i = 0; i < letters.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(letters[i]);
  }
  return out;
}

SignedPermutation Evaluate(std::span<const int> letters, int rank) {
  SignedPermutation w = SignedPermutation::Identity(rank);
  for (int i : letters) w = ApplyGeneratorRight(w, i);
  return w;
}

bool IsReduced(std::span<const int> letters, int rank) {
  return Length(Evaluate(letters, rank)) == static_cast<int>(letters.size());
}

std::vector<ReducedWord> EnumerateReducedWords(const SignedPermutation& w,
                                               int max_length) {
  const int length = Length(w);
  if (length > max_length) {
    throw BudgetExceeded("length " + std::to_string(length) +
                         " exceeds enumeration limit " +
                         std::to_string(max_length) + "; raise --limit");
  }
  std::vector<int> window(w.window().begin(), w.window().end());
  std::vector<int> suffix;
  std::vector<std::vector<int>> raw;
  CollectWords(window, length, suffix, raw);
  std::sort(raw.begin(), raw.end());
  std::vector<ReducedWord> words;
  words.reserve(raw.size());
  for (auto& letters : raw) words.push_back(ReducedWord(w.rank(), std::move(letters)));
  return words;
}

BigInt CountReducedWords(const SignedPermutation& w, int max_rank) {
  const int n = w.rank();
  if (n > max_rank || n > kMaxDpRank) {
    throw BudgetExceeded("rank " + std::to_string(n) +
                         " exceeds dp budget " +
                         std::to_string(std::min(max_rank, kMaxDpRank)) +
                         "; raise --dp-budget");
  }
  // level[x] = number of descending chains from w to x in the right weak
  // order; at length 0 only the identity remains.
  std::unordered_map<Key, BigInt> level{{Pack(w.window()), BigInt(1)}};
  for (int l = Length(w); l > 0; --l) {
    std::unordered_map<Key, BigInt> below;
    below.reserve(level.size() * 2);
    for (const auto& [key, paths] : level) {
      for (int i = 0; i < n; ++i) {
        if (IsRightDescent(key, i)) below[RightMultiply(key, i)] += paths;
      }
    }
    level = std::move(below);
  }
  return level.begin()->second;
}

ReducedWord Rotate(const ReducedWord& word) {
  const int n = word.rank();
  if (word.size() != n * n ||
      word.Value() != SignedPermutation::Longest(n)) {
    throw DomainError("rotate requires a reduced word of the longest element");
  }
  std::vector<int> letters(word.letters().begin() + 1, word.letters().end());
  letters.push_back(word.letters().front());
  return ReducedWord(n, std::move(letters));
}

bool HasYangBaxterFactorAt(std::span<const int> letters, size_t p, int k) {
  return k >= 1 && p + 2 < letters.size() && MatchesYangBaxter(letters, p, k);
}

bool HasZeroOneFactorAt(std::span<const int> letters, size_t p) {
  if (p + 3 >= letters.size()) return false;
  const int a = letters[p];
  if (a != 0 && a != 1) return false;
  return letters[p + 1] == 1 - a && letters[p + 2] == a &&
         letters[p + 3] == 1 - a;
}

int CountYangBaxterFactors(std::span<const int> letters) {
  int count = 0;
  for (size_t p = 0; p + 2 < letters.size(); ++p) {
    const int j = std::min(letters[p], letters[p + 1]);
    if (HasYangBaxterFactorAt(letters, p, j)) ++count;
  }
  return count;
}

int CountZeroOneFactors(std::span<const int> letters) {
  int count = 0;
  for (size_t p = 0; p + 3 < letters.size(); ++p) {
    if (HasZeroOneFactorAt(letters, p)) ++count;
  }
  return count;
}

FactorStats ComputeFactorStats(std::span<const int> letters) {
  return {CountYangBaxterFactors(letters), CountZeroOneFactors(letters)};
}

}  // namespace hyperoct
