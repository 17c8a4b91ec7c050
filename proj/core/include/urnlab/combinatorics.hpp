// Copyright 2026 The Urnlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef URNLAB_COMBINATORICS_HPP_
#define URNLAB_COMBINATORICS_HPP_

#include <cstdint>

#include "urnlab/rational.hpp"

namespace urnlab {

// Integer-valued closed forms, exact at any size.
BigInt triangular_count(std::int64_t n);        // n(n+1)/2
BigInt square_pyramidal_count(std::int64_t n);  // n(n+1)(2n+1)/6
BigInt binomial_count(std::int64_t n, std::int64_t k);  // C(n,k); 0 when k > n

/// 1 + 2 + ... + n as a Rational.
Rational sum_integers(std::int64_t n);

/// 1^2 + 2^2 + ... + n^2 as a Rational.
Rational square_pyramidal(std::int64_t n);

/// C(n, k) as a Rational; 0 when k > n.
Rational binomial(std::int64_t n, std::int64_t k);

/// sum of C(x, r) for x = r..n, computed by direct summation.
/// Equals binomial(n+1, r+1). Requires r <= n.
Rational hockey_stick_sum(std::int64_t r, std::int64_t n);

}  // namespace urnlab

#endif  // URNLAB_COMBINATORICS_HPP_
