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

#include "hyperoct/lambda_b.h"

#include <algorithm>
#include <stdexcept>

#include "hyperoct/errors.h"

namespace hyperoct {

StraightShape CodeOfPermutation(const SignedPermutation& v) {
  const auto window = v.window();
  std::vector<int> code;
  for (size_t i = 0; i < window.size(); ++i) {
    if (window[i] < 0) {
      throw DomainError("code of permutation requires an unsigned permutation, "
                        "got " + v.ToString());
    }
    int c = 0;
    for (size_t j = i + 1; j < window.size(); ++j) {
      if (window[j] < window[i]) ++c;
    }
    code.push_back(c);
  }
  std::sort(code.begin(), code.end(), std::greater<>());
  return StraightShape(std::move(code)).Transpose();
}

ShapeInputs ComputeShapeInputs(const SignedPermutation& w) {
  std::vector<int> sorted(w.window().begin(), w.window().end());
  std::sort(sorted.begin(), sorted.end());
  SignedPermutation u = SignedPermutation::FromWindow(sorted);
  SignedPermutation v = Multiply(Inverse(u), w);
  std::vector<int> negatives;
  for (int x : sorted) {
    if (x < 0) negatives.push_back(-x);
  }
  // `sorted` lists the negatives by decreasing absolute value.
  ShiftedShape mu(std::move(negatives));
  StraightShape code_shape = CodeOfPermutation(v);
  return {std::move(u), std::move(v), std::move(mu), std::move(code_shape)};
}

ShiftedTableau BuildGluedTableau(const SignedPermutation& w,
                                 const ShiftedTableau& u,
                                 const StraightTableau& v) {
  const int n = w.rank();
  const ShapeInputs inputs = ComputeShapeInputs(w);
  if (!u.IsStandard() || u.Shape() != inputs.negative_shape) {
    throw DomainError("U must be a standard shifted tableau of shape " +
                      inputs.negative_shape.ToString());
  }
  {
    std::map<Cell, Entry> straight;
    for (size_t r = 0; r < v.size(); ++r) {
      for (size_t c = 0; c < v[r].size(); ++c) {
        // Straight cell (r, c) drawn in shifted coordinates for the check.
        straight[{static_cast<int>(r) + 1, static_cast<int>(c) + 1}] =
            Entry{v[r][c], false};
      }
    }
    bool ok = ShapeOf(v) == inputs.code_shape;
    int expected = 1;
    std::vector<int> seen;
    for (const auto& row : v) seen.insert(seen.end(), row.begin(), row.end());
    std::sort(seen.begin(), seen.end());
    for (int x : seen) ok = ok && x == expected++;
    for (const auto& [cell, entry] : straight) {
      auto right = straight.find({cell.row, cell.col + 1});
      auto down = straight.find({cell.row + 1, cell.col});
      if (right != straight.end() && right->second.value <= entry.value) ok = false;
      if (down != straight.end() && down->second.value <= entry.value) ok = false;
    }
    if (!ok) {
      throw DomainError("V must be a standard Young tableau of shape " +
                        inputs.code_shape.ToString());
    }
  }

  std::map<Cell, Entry> entries = u.entries();
  int marker = 0;
  for (int col = n; col >= 1; --col) {
    for (int row = col; row >= 1; --row) {
      if (!entries.count({row, col})) entries[{row, col}] = Entry{++marker, true};
    }
  }
  const int offset = inputs.negative_shape.size();
  for (size_t r = 0; r < v.size(); ++r) {
    for (size_t c = 0; c < v[r].size(); ++c) {
      entries[{static_cast<int>(r) + 1, n + 1 + static_cast<int>(c)}] =
          Entry{v[r][c] + offset, false};
    }
  }
  return ShiftedTableau(std::move(entries));
}

LambdaBTrace TraceLambdaB(const SignedPermutation& w, const ShiftedTableau& u,
                          const StraightTableau& v) {
  LambdaBTrace trace{BuildGluedTableau(w, u, v), {}, {}, {}};
  ShiftedTableau t = trace.glued;
  while (auto marker = t.NextMarker()) {
    JdtResult step = JeuDeTaquinRemove(t, *t.Find(Entry{*marker, true}));
    trace.slides_per_marker.push_back(step.slides);
    t = std::move(step.tableau);
  }
  if (!t.IsValid()) {
    throw std::logic_error("construction for " + w.ToString() +
                           " did not end in a shifted tableau:\n" + t.Render());
  }
  trace.shape = *t.Shape();
  trace.result = std::move(t);
  return trace;
}

ShiftedShape LambdaB(const SignedPermutation& w, const ShiftedTableau& u,
                     const StraightTableau& v) {
  return TraceLambdaB(w, u, v).shape;
}

ShiftedShape LambdaB(const SignedPermutation& w) {
  const ShapeInputs inputs = ComputeShapeInputs(w);
  return LambdaB(w, RowReadingTableau(inputs.negative_shape),
                 RowReadingTableau(inputs.code_shape));
}

ShiftedShape LongestElementShape(int n) {
  std::vector<int> parts;
  for (int i = 1; i <= n; ++i) parts.push_back(2 * (n - i) + 1);
  return ShiftedShape(std::move(parts));
}

ShiftedShape WkShape(int n, int k) {
  if (k < 1 || k > n - 2) {
    throw DomainError("k = " + std::to_string(k) + " outside [1, " +
                      std::to_string(n - 2) + "]");
  }
  // (2n-1, 2n-3, ..., 2k+5, 2k+1, 2k, 2k-1, ..., 3, 1)
  std::vector<int> parts;
  for (int p = 2 * n - 1; p >= 2 * k + 5; p -= 2) parts.push_back(p);
  parts.push_back(2 * k + 1);
  for (int p = 2 * k; p >= 1; --p) {
    if (p == 2 * k || p % 2 == 1) parts.push_back(p);
  }
  return ShiftedShape(std::move(parts));
}

ShiftedShape WPrimeShape(int n) {
  if (n < 2) throw DomainError("w' requires n >= 2");
  std::vector<int> parts;
  for (int p = 2 * n - 1; p >= 5; p -= 2) parts.push_back(p);
  return ShiftedShape(std::move(parts));
}

}  // namespace hyperoct
