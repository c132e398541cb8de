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

#ifndef HYPEROCT_TESTS_ORACLES_H_
#define HYPEROCT_TESTS_ORACLES_H_

// Brute-force reference computations for the tests. Everything here works on
// raw windows and avoids the library's length, descent and enumeration code.

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <span>
#include <vector>

namespace hyperoct::oracle {

using Window = std::vector<int>;

// w * s_i on a raw window.
inline Window RightAct(Window w, int i) {
  if (i == 0) {
    w[0] = -w[0];
  } else {
    std::swap(w[i - 1], w[i]);
  }
  return w;
}

// Distance from the identity in the Cayley graph of B_n.
inline std::map<Window, int> BfsLengths(int n) {
  Window id(n);
  for (int i = 0; i < n; ++i) id[i] = i + 1;
  std::map<Window, int> dist{{id, 0}};
  std::deque<Window> queue{id};
  while (!queue.empty()) {
    Window w = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      Window x = RightAct(w, i);
      if (dist.emplace(x, dist[w] + 1).second) queue.push_back(x);
    }
  }
  return dist;
}

// Strips right descents, found by comparing window entries, until none are
// left; returns the number of steps.
inline int GreedyLength(Window w) {
  int steps = 0;
  while (true) {
    int found = -1;
    if (w[0] < 0) found = 0;
    for (size_t i = 1; found < 0 && i < w.size(); ++i) {
      if (w[i - 1] > w[i]) found = static_cast<int>(i);
    }
    if (found < 0) return steps;
    w = RightAct(w, found);
    ++steps;
  }
}

// Every word of the given length over {0, ..., n-1} whose product is w, in
// lexicographic order.
inline std::vector<std::vector<int>> BruteForceWords(const Window& w,
                                                     int length) {
  const int n = static_cast<int>(w.size());
  std::vector<std::vector<int>> out;
  std::vector<int> word(length, 0);
  while (true) {
    Window x(n);
    for (int i = 0; i < n; ++i) x[i] = i + 1;
    for (int letter : word) x = RightAct(x, letter);
    if (x == w) out.push_back(word);
    int pos = length - 1;
    while (pos >= 0 && word[pos] == n - 1) word[pos--] = 0;
    if (pos < 0) break;
    ++word[pos];
  }
  return out;
}

// Tries every subsequence of w of the pattern's length.
inline bool NaiveContains(const Window& w, const Window& p) {
  const size_t k = p.size();
  if (k > w.size()) return false;
  std::vector<bool> choose(w.size(), false);
  std::fill(choose.begin(), choose.begin() + k, true);
  do {
    Window sub;
    for (size_t i = 0; i < w.size(); ++i) {
      if (choose[i]) sub.push_back(w[i]);
    }
    bool match = true;
    for (size_t a = 0; a < k && match; ++a) {
      if ((sub[a] < 0) != (p[a] < 0)) match = false;
      for (size_t b = 0; b < k && match; ++b) {
        if ((sub[a] < sub[b]) != (p[a] < p[b])) match = false;
      }
    }
    if (match) return true;
  } while (std::prev_permutation(choose.begin(), choose.end()));
  return false;
}

// Copies a span so older gmock container matchers can inspect it.
inline std::vector<int> Vec(std::span<const int> s) { return {s.begin(), s.end()}; }

}  // namespace hyperoct::oracle

#endif  // HYPEROCT_TESTS_ORACLES_H_
