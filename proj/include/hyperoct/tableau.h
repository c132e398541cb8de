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

#ifndef HYPEROCT_TABLEAU_H_
#define HYPEROCT_TABLEAU_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperoct/shapes.h"

namespace hyperoct {

inline constexpr int kDefaultTableauEnumerationLimit = 12;

// An unprimed positive integer, or a primed marker j'.
struct Entry {
  int value = 0;
  bool primed = false;

  std::string ToString() const {
    return std::to_string(value) + (primed ? "'" : "");
  }

  friend bool operator==(const Entry&, const Entry&) = default;
};

// A partial filling of cells in shifted coordinates. The cell set is not
// required to form a shifted shape: the intermediate tableaux of the
// lambda^B construction are glued row profiles with holes.
class ShiftedTableau {
 public:
  ShiftedTableau() = default;
  explicit ShiftedTableau(std::map<Cell, Entry> entries)
      : entries_(std::move(entries)) {}
  // Filling of `shape` from row-major values (all unprimed).
  static ShiftedTableau FromRows(const ShiftedShape& shape,
                                 const std::vector<int>& row_major);

  const std::map<Cell, Entry>& entries() const { return entries_; }
  int size() const { return static_cast<int>(entries_.size()); }
  std::optional<Entry> At(Cell c) const;
  std::optional<Cell> Find(Entry e) const;
  // Smallest primed marker still present.
  std::optional<int> NextMarker() const;

  // The shifted shape occupied by the cells, if they form one.
  std::optional<ShiftedShape> Shape() const;
  // Shape() is present and unprimed entries increase along rows and down
  // columns.
  bool IsValid() const;
  // Valid, all unprimed, entries exactly 1..N.
  bool IsStandard() const;

  // Aligned rows, shifted indentation, primed entries suffixed with "'" and
  // holes drawn as ".".
  std::string Render() const;

  friend bool operator==(const ShiftedTableau&,
                         const ShiftedTableau&) = default;

 private:
  std::map<Cell, Entry> entries_;
};

// Rows of a standard Young tableau of straight shape.
using StraightTableau = std::vector<std::vector<int>>;

StraightShape ShapeOf(const StraightTableau& t);

struct JdtResult {
  ShiftedTableau tableau;
  int slides = 0;
};

// Deletes the marker at `cell` and slides the hole outward: at each step the
// smaller unprimed neighbour to the right or below moves into the hole. Only
// unprimed entries ever move. Throws DomainError unless `cell` holds the
// smallest marker present; throws std::logic_error if a primed entry would
// have to slide.
JdtResult JeuDeTaquinRemove(const ShiftedTableau& t, Cell cell);

// All standard shifted tableaux of `shape`, in a deterministic order.
// Throws BudgetExceeded above `max_cells`.
std::vector<ShiftedTableau> EnumerateSytShifted(
    const ShiftedShape& shape, int max_cells = kDefaultTableauEnumerationLimit);

std::vector<StraightTableau> EnumerateSytStraight(
    const StraightShape& shape,
    int max_cells = kDefaultTableauEnumerationLimit);

// Row-reading fillings 1..N.
ShiftedTableau RowReadingTableau(const ShiftedShape& shape);
StraightTableau RowReadingTableau(const StraightShape& shape);

}  // namespace hyperoct

#endif  // HYPEROCT_TABLEAU_H_
