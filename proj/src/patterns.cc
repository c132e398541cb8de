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

#include "hyperoct/patterns.h"

#include <array>

#include "hyperoct/errors.h"

namespace hyperoct {
namespace {

// Extends a partial embedding of p[0..depth) ending before position `from`.
// Relative order is checked incrementally against every earlier pick.
bool Embed(std::span<const int> w, std::span<const int> p, size_t depth,
           size_t from, std::vector<int>& picked) {
  if (depth == p.size()) return true;
  for (size_t pos = from; pos + (p.size() - depth) <= w.size(); ++pos) {
    const int v = w[pos];
    if ((v < 0) != (p[depth] < 0)) continue;
    bool consistent = true;
    for (size_t j = 0; j < depth && consistent; ++j) {
      consistent = (picked[j] < v) == (p[j] < p[depth]);
    }
    if (!consistent) continue;
    picked[depth] = v;
    if (Embed(w, p, depth + 1, pos + 1, picked)) return true;
  }
  return false;
}

const std::array<std::vector<int>, 9> kVexillaryTable = {{
    {2, 1},
    {-3, 2, -1},
    {2, -3, 4, -1},
    {-2, -3, 4, -1},
    {3, -4, -1, -2},
    {-3, -4, 1, -2},
    {-3, -4, -1, -2},
    {-4, 1, -2, 3},
    {-4, -1, -2, 3},
}};

}  // namespace

SignedPattern SignedPattern::FromWindow(std::vector<int> window) {
  // Reuses the group element validation.
  SignedPermutation::FromWindow(window);
  return SignedPattern(std::move(window));
}

SignedPattern SignedPattern::Parse(std::string_view text) {
  SignedPermutation w = SignedPermutation::Parse(text);
  return SignedPattern(std::vector<int>(w.window().begin(), w.window().end()));
}

std::string SignedPattern::ToString() const {
  return SignedPermutation::FromWindow(window_).ToString();
}

bool ContainsSignedPattern(const SignedPermutation& w, const SignedPattern& p) {
  if (p.size() > w.rank()) return false;
  std::vector<int> picked(p.size());
  return Embed(w.window(), p.window(), 0, 0, picked);
}

std::span<const SignedPattern> TypeBVexillaryPatterns() {
  static const std::vector<SignedPattern> patterns = [] {
    std::vector<SignedPattern> out;
    for (const auto& window : kVexillaryTable) {
      out.push_back(SignedPattern::FromWindow(window));
    }
    return out;
  }();
  return patterns;
}

std::optional<SignedPattern> FindVexillaryObstruction(
    const SignedPermutation& w) {
  for (const SignedPattern& p : TypeBVexillaryPatterns()) {
    if (ContainsSignedPattern(w, p)) return p;
  }
  return std::nullopt;
}

bool IsVexillaryTypeB(const SignedPermutation& w) {
  return !FindVexillaryObstruction(w).has_value();
}

}  // namespace hyperoct
