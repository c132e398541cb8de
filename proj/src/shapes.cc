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

#include "hyperoct/shapes.h"

#include <algorithm>
#include <charconv>

#include "hyperoct/errors.h"

namespace hyperoct {
namespace {

std::vector<int> ParseParts(std::string_view text) {
  std::string_view body = text;
  while (!body.empty() && body.front() == ' ') body.remove_prefix(1);
  while (!body.empty() && body.back() == ' ') body.remove_suffix(1);
  if (!body.empty() && body.front() == '(') {
    if (body.back() != ')') {
      throw ParseError("bad shape '" + std::string(text) + "': missing ')'");
    }
    body = body.substr(1, body.size() - 2);
  }
  std::vector<int> parts;
  if (body.empty()) return parts;
  size_t start = 0;
  while (true) {
    size_t comma = body.find(',', start);
    std::string_view token = body.substr(start, comma - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() ||
        ptr != token.data() + token.size() || value < 0) {
      throw ParseError("bad token '" + std::string(token) + "' in shape");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

std::string FormatParts(std::span<const int> parts) {
  std::string out = "(";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts[i]);
  }
  return out + ")";
}

std::vector<int> DropZeros(std::vector<int> parts) {
  for (int p : parts) {
    if (p < 0) throw DomainError("negative part " + std::to_string(p));
  }
  std::erase(parts, 0);
  return parts;
}

int Sum(std::span<const int> parts) {
  int total = 0;
  for (int p : parts) total += p;
  return total;
}

}  // namespace

StraightShape::StraightShape(std::vector<int> parts)
    : parts_(DropZeros(std::move(parts))) {
  for (size_t i = 1; i < parts_.size(); ++i) {
    if (parts_[i] > parts_[i - 1]) {
      throw DomainError("straight shape " + FormatParts(parts_) +
                        " is not weakly decreasing");
    }
  }
}

StraightShape StraightShape::Parse(std::string_view text) {
  try {
    return StraightShape(ParseParts(text));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

int StraightShape::size() const { return Sum(parts_); }

bool StraightShape::Contains(Cell c) const {
  return c.row >= 1 && c.row <= rows() && c.col >= 1 &&
         c.col <= parts_[c.row - 1];
}

StraightShape StraightShape::Transpose() const {
  std::vector<int> columns(parts_.empty() ? 0 : parts_.front(), 0);
  for (int p : parts_) {
    for (int c = 0; c < p; ++c) ++columns[c];
  }
  return StraightShape(std::move(columns));
}

std::vector<Cell> StraightShape::Cells() const {
  std::vector<Cell> cells;
  for (int r = 1; r <= rows(); ++r) {
    for (int c = 1; c <= parts_[r - 1]; ++c) cells.push_back({r, c});
  }
  return cells;
}

std::string StraightShape::ToString() const { return FormatParts(parts_); }

ShiftedShape::ShiftedShape(std::vector<int> parts)
    : parts_(DropZeros(std::move(parts))) {
  for (size_t i = 1; i < parts_.size(); ++i) {
    if (parts_[i] >= parts_[i - 1]) {
      throw DomainError("shifted shape " + FormatParts(parts_) +
                        " is not strictly decreasing");
    }
  }
}

ShiftedShape ShiftedShape::Parse(std::string_view text) {
  try {
    return ShiftedShape(ParseParts(text));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

ShiftedShape ShiftedShape::Staircase(int n) {
  std::vector<int> parts;
  for (int p = n; p >= 1; --p) parts.push_back(p);
  return ShiftedShape(std::move(parts));
}

int ShiftedShape::size() const { return Sum(parts_); }

bool ShiftedShape::Contains(Cell c) const {
  return c.row >= 1 && c.row <= rows() && c.col >= c.row &&
         c.col < c.row + parts_[c.row - 1];
}

std::vector<Cell> ShiftedShape::Cells() const {
  std::vector<Cell> cells;
  for (int r = 1; r <= rows(); ++r) {
    for (int c = r; c < r + parts_[r - 1]; ++c) cells.push_back({r, c});
  }
  return cells;
}

std::string ShiftedShape::ToString() const { return FormatParts(parts_); }

int ShiftedHookLength(const ShiftedShape& shape, Cell cell) {
  if (!shape.Contains(cell)) {
    throw DomainError("cell (" + std::to_string(cell.row) + "," +
                      std::to_string(cell.col) + ") outside shape " +
                      shape.ToString());
  }
  const auto parts = shape.parts();
  // Row, from u to the end.
  int hook = cell.row + parts[cell.row - 1] - cell.col;
  // Column, strictly below u.
  for (int r = cell.row + 1; r <= shape.rows(); ++r) {
    if (shape.Contains({r, cell.col})) ++hook;
  }
  // Row (column of u) + 1, in full.
  if (cell.col + 1 <= shape.rows()) hook += parts[cell.col];
  return hook;
}

int StraightHookLength(const StraightShape& shape, Cell cell) {
  if (!shape.Contains(cell)) {
    throw DomainError("cell (" + std::to_string(cell.row) + "," +
                      std::to_string(cell.col) + ") outside shape " +
                      shape.ToString());
  }
  int hook = shape.parts()[cell.row - 1] - cell.col + 1;
  for (int r = cell.row + 1; r <= shape.rows(); ++r) {
    if (shape.parts()[r - 1] >= cell.col) ++hook;
  }
  return hook;
}

std::vector<int> ShiftedHookLengths(const ShiftedShape& shape) {
  std::vector<int> hooks;
  for (Cell c : shape.Cells()) hooks.push_back(ShiftedHookLength(shape, c));
  return hooks;
}

BigInt CountSytShifted(const ShiftedShape& shape, const ShiftedHookFn& hook) {
  BigInt product = 1;
  for (Cell c : shape.Cells()) product *= hook(shape, c);
  const BigInt total = Factorial(shape.size());
  if (product == 0 || total % product != 0) {
    throw DomainError("hook product does not divide " +
                      std::to_string(shape.size()) + "! for shape " +
                      shape.ToString());
  }
  return total / product;
}

BigInt CountSytStraight(const StraightShape& shape) {
  BigInt product = 1;
  for (Cell c : shape.Cells()) product *= StraightHookLength(shape, c);
  return Factorial(shape.size()) / product;
}

}  // namespace hyperoct
