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

#ifndef HYPEROCT_ERRORS_H_
#define HYPEROCT_ERRORS_H_

#include <stdexcept>
#include <string>

namespace hyperoct {

// Malformed text input (permutations, words, shapes). The CLI maps this to
// exit code 2.
class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

// A well-formed request outside the domain of an operation, such as a rank
// mismatch or an n outside a validity range. Exit code 1.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// An enumeration or dynamic-programming budget would be exceeded.
class BudgetExceeded : public DomainError {
 public:
  explicit BudgetExceeded(const std::string& what) : DomainError(what) {}
};

}  // namespace hyperoct

#endif  // HYPEROCT_ERRORS_H_
