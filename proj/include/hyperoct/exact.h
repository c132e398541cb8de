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

#ifndef HYPEROCT_EXACT_H_
#define HYPEROCT_EXACT_H_

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hyperoct {

using BigInt = boost::multiprecision::cpp_int;
// Always normalized: lowest terms, positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt Numerator(const Rational& q) {
  return boost::multiprecision::numerator(q);
}
inline BigInt Denominator(const Rational& q) {
  return boost::multiprecision::denominator(q);
}

// "p/q", also for integers ("1/1").
inline std::string ToString(const Rational& q) {
  return Numerator(q).str() + "/" + Denominator(q).str();
}

inline BigInt Factorial(long n) {
  BigInt r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt Binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

}  // namespace hyperoct

#endif  // HYPEROCT_EXACT_H_
