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

#ifndef HYPEROCT_SHAPES_H_
#define HYPEROCT_SHAPES_H_

#include <compare>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hyperoct/exact.h"

namespace hyperoct {

// 1-based (row, column). In a shifted shape row r spans columns
// r, ..., r + parts[r-1] - 1; in a straight shape columns 1, ..., parts[r-1].
struct Cell {
  int row = 0;
  int col = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Weakly decreasing positive parts. Zero parts are dropped on construction.
class StraightShape {
 public:
  StraightShape() = default;
  // Throws DomainError if the nonzero parts are not weakly decreasing or a
  // part is negative.
  explicit StraightShape(std::vector<int> parts);
  static StraightShape Parse(std::string_view text);

  std::span<const int> parts() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool empty() const { return parts_.empty(); }
  bool Contains(Cell c) const;
  StraightShape Transpose() const;
  // Row-major order.
  std::vector<Cell> Cells() const;
  std::string ToString() const;

  friend bool operator==(const StraightShape&, const StraightShape&) = default;

 private:
  std::vector<int> parts_;
};

// Strictly decreasing positive parts, drawn with row r indented r - 1 cells.
class ShiftedShape {
 public:
  ShiftedShape() = default;
  explicit ShiftedShape(std::vector<int> parts);
  static ShiftedShape Parse(std::string_view text);
  // (n, n-1, ..., 1).
  static ShiftedShape Staircase(int n);

  std::span<const int> parts() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool empty() const { return parts_.empty(); }
  bool Contains(Cell c) const;
  std::vector<Cell> Cells() const;
  std::string ToString() const;

  friend bool operator==(const ShiftedShape&, const ShiftedShape&) = default;
  friend auto operator<=>(const ShiftedShape&, const ShiftedShape&) = default;

 private:
  std::vector<int> parts_;
};

using ShiftedHookFn = std::function<int(const ShiftedShape&, Cell)>;

// Cells weakly below in the same column, weakly right in the same row (u
// counted once), plus every cell of row k+1 when u sits in column k.
// Throws DomainError for a cell outside the shape.
int ShiftedHookLength(const ShiftedShape& shape, Cell cell);

// Cells weakly below in the same column or weakly right in the same row.
int StraightHookLength(const StraightShape& shape, Cell cell);

// Row-major hook lengths.
std::vector<int> ShiftedHookLengths(const ShiftedShape& shape);

// N! / prod h^B(u). `hook` exists so that verification can run against a
// deliberately broken rule; throws DomainError if the product does not
// divide N!.
BigInt CountSytShifted(const ShiftedShape& shape,
                       const ShiftedHookFn& hook = ShiftedHookLength);

BigInt CountSytStraight(const StraightShape& shape);

}  // namespace hyperoct

#endif  // HYPEROCT_SHAPES_H_
