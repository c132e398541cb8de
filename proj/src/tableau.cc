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

#include "hyperoct/tableau.h"

#include <algorithm>
#include <stdexcept>

#include "hyperoct/errors.h"

namespace hyperoct {

ShiftedTableau ShiftedTableau::FromRows(const ShiftedShape& shape,
                                        const std::vector<int>& row_major) {
  const auto cells = shape.Cells();
  if (cells.size() != row_major.size()) {
    throw DomainError("filling has " + std::to_string(row_major.size()) +
                      " entries for shape " + shape.ToString());
  }
  std::map<Cell, Entry> entries;
  for (size_t i = 0; i < cells.size(); ++i) {
    entries[cells[i]] = Entry{row_major[i], false};
  }
  return ShiftedTableau(std::move(entries));
}

std::optional<Entry> ShiftedTableau::At(Cell c) const {
  auto it = entries_.find(c);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::optional<Cell> ShiftedTableau::Find(Entry e) const {
  for (const auto& [cell, entry] : entries_) {
    if (entry == e) return cell;
  }
  return std::nullopt;
}

std::optional<int> ShiftedTableau::NextMarker() const {
  std::optional<int> best;
  for (const auto& [cell, entry] : entries_) {
    if (entry.primed && (!best || entry.value < *best)) best = entry.value;
  }
  return best;
}

std::optional<ShiftedShape> ShiftedTableau::Shape() const {
  std::vector<int> parts;
  int row = 1;
  int expected_col = 1;
  // std::map iterates row-major, so each row must be a contiguous run
  // starting on the diagonal.
  for (const auto& [cell, entry] : entries_) {
    if (cell.row == row && cell.col == expected_col && !parts.empty()) {
      ++parts.back();
    } else if (cell.row == static_cast<int>(parts.size()) + 1 &&
               cell.col == cell.row) {
      parts.push_back(1);
      row = cell.row;
    } else {
      return std::nullopt;
    }
    expected_col = cell.col + 1;
  }
  for (size_t i = 1; i < parts.size(); ++i) {
    if (parts[i] >= parts[i - 1]) return std::nullopt;
  }
  return ShiftedShape(std::move(parts));
}

bool ShiftedTableau::IsValid() const {
  if (!Shape()) return false;
  for (const auto& [cell, entry] : entries_) {
    if (entry.primed) continue;
    for (Cell next : {Cell{cell.row, cell.col + 1}, Cell{cell.row + 1, cell.col}}) {
      auto other = At(next);
      if (other && !other->primed && other->value <= entry.value) return false;
    }
  }
  return true;
}

bool ShiftedTableau::IsStandard() const {
  if (!IsValid()) return false;
  std::vector<bool> seen(entries_.size() + 1, false);
  for (const auto& [cell, entry] : entries_) {
    if (entry.primed || entry.value < 1 ||
        entry.value > static_cast<int>(entries_.size()) || seen[entry.value]) {
      return false;
    }
    seen[entry.value] = true;
  }
  return true;
}

std::string ShiftedTableau::Render() const {
  if (entries_.empty()) return "";
  size_t width = 1;
  int last_row = 0;
  for (const auto& [cell, entry] : entries_) {
    width = std::max(width, entry.ToString().size());
    last_row = std::max(last_row, cell.row);
  }
  std::string out;
  for (int r = 1; r <= last_row; ++r) {
    int last_col = 0;
    for (const auto& [cell, entry] : entries_) {
      if (cell.row == r) last_col = std::max(last_col, cell.col);
    }
    std::string line;
    for (int c = 1; c <= last_col; ++c) {
      std::string text;
      if (c < r) {
        text = "";
      } else if (auto e = At({r, c})) {
        text = e->ToString();
      } else {
        text = ".";
      }
      if (c > 1) line += ' ';
      line += std::string(width - text.size(), ' ') + text;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

StraightShape ShapeOf(const StraightTableau& t) {
  std::vector<int> parts;
  for (const auto& row : t) parts.push_back(static_cast<int>(row.size()));
  return StraightShape(std::move(parts));
}

JdtResult JeuDeTaquinRemove(const ShiftedTableau& t, Cell cell) {
  const auto marker = t.At(cell);
  const auto expected = t.NextMarker();
  if (!marker || !marker->primed || !expected || marker->value != *expected) {
    throw DomainError("cell (" + std::to_string(cell.row) + "," +
                      std::to_string(cell.col) +
                      ") does not hold the next marker" +
                      (expected ? " " + std::to_string(*expected) + "'" : ""));
  }
  std::map<Cell, Entry> entries = t.entries();
  entries.erase(cell);
  Cell hole = cell;
  int slides = 0;
  while (true) {
    std::optional<Cell> from;
    for (Cell next : {Cell{hole.row, hole.col + 1}, Cell{hole.row + 1, hole.col}}) {
      auto it = entries.find(next);
      if (it == entries.end()) continue;
      if (it->second.primed) {
        throw std::logic_error("jeu de taquin would move primed entry " +
                               it->second.ToString());
      }
      if (!from || it->second.value < entries.at(*from).value) from = next;
    }
    if (!from) break;
    entries[hole] = entries.at(*from);
    entries.erase(*from);
    hole = *from;
    ++slides;
  }
  return {ShiftedTableau(std::move(entries)), slides};
}

namespace {

template <typename Addable, typename Emit>
void Backtrack(const std::vector<Cell>& cells, std::map<Cell, int>& filled,
               int next, const Addable& addable, const Emit& emit) {
  if (next > static_cast<int>(cells.size())) {
    emit(filled);
    return;
  }
  for (Cell c : cells) {
    if (filled.count(c) || !addable(c, filled)) continue;
    filled[c] = next;
    Backtrack(cells, filled, next + 1, addable, emit);
    filled.erase(c);
  }
}

void CheckCellBudget(int size, int max_cells) {
  if (size > max_cells) {
    throw BudgetExceeded("shape has " + std::to_string(size) +
                         " cells, tableau enumeration limit is " +
                         std::to_string(max_cells));
  }
}

}  // namespace

std::vector<ShiftedTableau> EnumerateSytShifted(const ShiftedShape& shape,
                                                int max_cells) {
  CheckCellBudget(shape.size(), max_cells);
  std::vector<ShiftedTableau> out;
  std::map<Cell, int> filled;
  auto addable = [](Cell c, const std::map<Cell, int>& f) {
    return (c.col == c.row || f.count({c.row, c.col - 1})) &&
           (c.row == 1 || f.count({c.row - 1, c.col}));
  };
  Backtrack(shape.Cells(), filled, 1, addable,
            [&](const std::map<Cell, int>& f) {
              std::map<Cell, Entry> entries;
              for (const auto& [c, v] : f) entries[c] = Entry{v, false};
              out.emplace_back(std::move(entries));
            });
  return out;
}

std::vector<StraightTableau> EnumerateSytStraight(const StraightShape& shape,
                                                  int max_cells) {
  CheckCellBudget(shape.size(), max_cells);
  std::vector<StraightTableau> out;
  std::map<Cell, int> filled;
  auto addable = [](Cell c, const std::map<Cell, int>& f) {
    return (c.col == 1 || f.count({c.row, c.col - 1})) &&
           (c.row == 1 || f.count({c.row - 1, c.col}));
  };
  Backtrack(shape.Cells(), filled, 1, addable,
            [&](const std::map<Cell, int>& f) {
              StraightTableau t(shape.rows());
              for (const auto& [c, v] : f) t[c.row - 1].push_back(v);
              out.push_back(std::move(t));
            });
  return out;
}

ShiftedTableau RowReadingTableau(const ShiftedShape& shape) {
  std::vector<int> values(shape.size());
  for (size_t i = 0; i < values.size(); ++i) values[i] = static_cast<int>(i) + 1;
  return ShiftedTableau::FromRows(shape, values);
}

StraightTableau RowReadingTableau(const StraightShape& shape) {
  StraightTableau t;
  int next = 1;
  for (int p : shape.parts()) {
    std::vector<int> row(p);
    for (int& v : row) v = next++;
    t.push_back(std::move(row));
  }
  return t;
}

}  // namespace hyperoct
