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

#include "urnlab/combinatorics.hpp"

#include <stdexcept>

namespace urnlab {
namespace {

void require_non_negative(std::int64_t value, const char* what) {
  if (value < 0) throw std::domain_error(std::string(what) + ": negative argument");
}

}  // namespace

BigInt triangular_count(std::int64_t n) {
  require_non_negative(n, "triangular_count");
  return BigInt(n) * (BigInt(n) + 1) / 2;
}

BigInt square_pyramidal_count(std::int64_t n) {
  require_non_negative(n, "square_pyramidal_count");
  return BigInt(n) * (BigInt(n) + 1) * (2 * BigInt(n) + 1) / 6;
}

BigInt binomial_count(std::int64_t n, std::int64_t k) {
  require_non_negative(n, "binomial_count");
  require_non_negative(k, "binomial_count");
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  // Multiplicative form; each partial product is divisible by i.
  BigInt out = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

Rational sum_integers(std::int64_t n) {
  return Rational(triangular_count(n), 1);
}

Rational square_pyramidal(std::int64_t n) {
  return Rational(square_pyramidal_count(n), 1);
}

Rational binomial(std::int64_t n, std::int64_t k) {
  return Rational(binomial_count(n, k), 1);
}

Rational hockey_stick_sum(std::int64_t r, std::int64_t n) {
  require_non_negative(r, "hockey_stick_sum");
  require_non_negative(n, "hockey_stick_sum");
  if (r > n) throw std::domain_error("hockey_stick_sum: requires r <= n");
  BigInt sum = 0;
  for (std::int64_t x = r; x <= n; ++x) {
    sum += binomial_count(x, r);
  }
  return Rational(sum, 1);
}

}  // namespace urnlab
