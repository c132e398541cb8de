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

#ifndef HYPEROCT_LAMBDA_B_H_
#define HYPEROCT_LAMBDA_B_H_

#include <vector>

#include "hyperoct/shapes.h"
#include "hyperoct/signed_permutation.h"
#include "hyperoct/tableau.h"

namespace hyperoct {

// The data the shifted shape lambda^B(w) is built from.
struct ShapeInputs {
  // The window of w sorted increasingly.
  SignedPermutation sorted;
  // sorted^{-1} * w; always an unsigned permutation.
  SignedPermutation unsigned_part;
  // Parts |u_i| over the negative entries of `sorted`.
  ShiftedShape negative_shape;
  // Shape of the tableau glued on the right.
  StraightShape code_shape;
};

// Transpose of the partition formed by the nonzero c_i, where
// c_i = #{j > i : v(j) < v(i)}. Throws DomainError if v has a negative entry.
StraightShape CodeOfPermutation(const SignedPermutation& v);

ShapeInputs ComputeShapeInputs(const SignedPermutation& w);

// The staircase of rank n holding `u` on its negative shape, the remaining
// cells labelled 1', 2', ... column by column from the right (bottom to top
// within a column), and `v` shifted by |u| glued to the right of row i.
// Throws DomainError if u or v is not standard of the required shape.
ShiftedTableau BuildGluedTableau(const SignedPermutation& w,
                                 const ShiftedTableau& u,
                                 const StraightTableau& v);

struct LambdaBTrace {
  ShiftedTableau glued;
  // Slides performed while removing 1', 2', ... in order.
  std::vector<int> slides_per_marker;
  ShiftedTableau result;
  ShiftedShape shape;
};

// Full construction with explicit choices of the two standard tableaux.
// Throws std::logic_error if the final cells do not form a shifted shape.
LambdaBTrace TraceLambdaB(const SignedPermutation& w, const ShiftedTableau& u,
                          const StraightTableau& v);

// lambda^B(w) with row-reading choices for both tableaux. For vexillary w
// the result does not depend on that choice.
ShiftedShape LambdaB(const SignedPermutation& w);
ShiftedShape LambdaB(const SignedPermutation& w, const ShiftedTableau& u,
                     const StraightTableau& v);

// Closed forms of lambda^B for the longest element, for w_k and for w'.
ShiftedShape LongestElementShape(int n);
ShiftedShape WkShape(int n, int k);
ShiftedShape WPrimeShape(int n);

}  // namespace hyperoct

#endif  // HYPEROCT_LAMBDA_B_H_
