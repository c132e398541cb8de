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

#include "hyperoct/signed_permutation.h"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>

#include "hyperoct/errors.h"

namespace hyperoct {
namespace {

void CheckRank(int n) {
  if (n < 1) {
    throw DomainError("invalid rank " + std::to_string(n) +
                      ": rank must be at least 1");
  }
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

SignedPermutation SignedPermutation::Identity(int n) {
  CheckRank(n);
  std::vector<int> window(n);
  std::iota(window.begin(), window.end(), 1);
  return SignedPermutation(std::move(window));
}

SignedPermutation SignedPermutation::Longest(int n) {
  CheckRank(n);
  std::vector<int> window(n);
  for (int i = 0; i < n; ++i) window[i] = -(i + 1);
  return SignedPermutation(std::move(window));
}

SignedPermutation SignedPermutation::FromWindow(std::vector<int> window) {
  const int n = static_cast<int>(window.size());
  CheckRank(n);
  std::vector<bool> seen(n + 1, false);
  for (int v : window) {
    if (v == 0 || std::abs(v) > n) {
      throw DomainError("entry " + std::to_string(v) +
                        " out of range for rank " + std::to_string(n));
    }
    if (seen[std::abs(v)]) {
      throw DomainError("absolute value " + std::to_string(std::abs(v)) +
                        " repeated");
    }
    seen[std::abs(v)] = true;
  }
  return SignedPermutation(std::move(window));
}

SignedPermutation SignedPermutation::Parse(std::string_view text) {
  std::vector<std::string_view> tokens;
  size_t start = 0;
  while (true) {
    size_t comma = text.find(',', start);
    tokens.push_back(Trim(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  const int n = static_cast<int>(tokens.size());
  std::vector<int> window;
  std::vector<bool> seen(n + 1, false);
  for (std::string_view token : tokens) {
    int value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc() || ptr != last) {
      throw ParseError("bad token '" + std::string(token) +
                       "' in signed permutation");
    }
    if (value == 0) {
      throw ParseError("bad token '" + std::string(token) +
                       "': zero is not a signed value");
    }
    if (std::abs(value) > n) {
      throw ParseError("bad token '" + std::string(token) +
                       "': out of range for rank " + std::to_string(n));
    }
    if (seen[std::abs(value)]) {
      throw ParseError("bad token '" + std::string(token) +
                       "': absolute value repeated");
    }
    seen[std::abs(value)] = true;
    window.push_back(value);
  }
  return SignedPermutation(std::move(window));
}

bool SignedPermutation::IsIdentity() const {
  for (int i = 0; i < rank(); ++i) {
    if (window_[i] != i + 1) return false;
  }
  return true;
}

std::string SignedPermutation::ToString() const {
  std::string out;
  for (int i = 0; i < rank(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(window_[i]);
  }
  return out;
}

void CheckGenerator(int n, int i) {
  if (i < 0 || i >= n) {
    throw DomainError("generator index " + std::to_string(i) +
                      " out of range [0, " + std::to_string(n - 1) + "]");
  }
}

SignedPermutation Generator(int n, int i) {
  return ApplyGeneratorRight(SignedPermutation::Identity(n), i);
}

SignedPermutation ApplyGeneratorLeft(int i, const SignedPermutation& w) {
  CheckGenerator(w.rank(), i);
  std::vector<int> window(w.window().begin(), w.window().end());
  for (int& v : window) {
    const int sign = v < 0 ? -1 : 1;
    const int a = std::abs(v);
    if (i == 0) {
      if (a == 1) v = -v;
    } else if (a == i) {
      v = sign * (i + 1);
    } else if (a == i + 1) {
      v = sign * i;
    }
  }
  return SignedPermutation::FromWindow(std::move(window));
}

SignedPermutation ApplyGeneratorRight(const SignedPermutation& w, int i) {
  CheckGenerator(w.rank(), i);
  std::vector<int> window(w.window().begin(), w.window().end());
  if (i == 0) {
    window[0] = -window[0];
  } else {
    std::swap(window[i - 1], window[i]);
  }
  return SignedPermutation::FromWindow(std::move(window));
}

SignedPermutation Multiply(const SignedPermutation& a,
                           const SignedPermutation& b) {
  if (a.rank() != b.rank()) {
    throw DomainError("rank mismatch: " + std::to_string(a.rank()) + " vs " +
                      std::to_string(b.rank()));
  }
  std::vector<int> window(a.rank());
  for (int i = 1; i <= a.rank(); ++i) window[i - 1] = a(b(i));
  return SignedPermutation::FromWindow(std::move(window));
}

SignedPermutation Inverse(const SignedPermutation& w) {
  std::vector<int> window(w.rank());
  for (int i = 1; i <= w.rank(); ++i) {
    const int v = w(i);
    window[std::abs(v) - 1] = v < 0 ? -i : i;
  }
  return SignedPermutation::FromWindow(std::move(window));
}

int Length(const SignedPermutation& w) {
  const auto window = w.window();
  int length = 0;
  for (size_t i = 0; i < window.size(); ++i) {
    for (size_t j = i + 1; j < window.size(); ++j) {
      if (window[i] > window[j]) ++length;
    }
    if (window[i] < 0) length -= window[i];
  }
  return length;
}

std::vector<int> RightDescents(const SignedPermutation& w) {
  std::vector<int> descents;
  if (w(1) < 0) descents.push_back(0);
  for (int i = 1; i < w.rank(); ++i) {
    if (w(i) > w(i + 1)) descents.push_back(i);
  }
  return descents;
}

std::vector<SignedPermutation> AllElements(int n) {
  CheckRank(n);
  if (n > 8) {
    throw BudgetExceeded("refusing to list all elements of B_" +
                         std::to_string(n) + " (limit 8)");
  }
  std::vector<SignedPermutation> elements;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> window = perm;
      for (int i = 0; i < n; ++i) {
        if (mask & (1u << i)) window[i] = -window[i];
      }
      elements.push_back(SignedPermutation::FromWindow(std::move(window)));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(elements.begin(), elements.end());
  return elements;
}

}  // namespace hyperoct
