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

#include "urnlab/symmetry.hpp"

#include <stdexcept>

namespace urnlab {
namespace {

void require_process_size(int n) {
  if (n < 2) throw std::domain_error("index process needs at least 2 balls");
}

}  // namespace

IndexProcess::IndexProcess(int n, int green_boundary, int first_pick, int second_pick)
    : n(n),
      green_boundary(green_boundary),
      first_pick(first_pick),
      second_pick(second_pick) {
  require_process_size(n);
  if (green_boundary < 0 || green_boundary >= first_pick || first_pick > n) {
    throw std::domain_error("IndexProcess: requires 0 <= boundary < first pick <= n");
  }
  if (second_pick < 1 || second_pick > n || second_pick == first_pick) {
    throw std::domain_error("IndexProcess: second pick must be in {1..n} minus the first");
  }
}

IntervalTriple intervals_for(int n, int green_boundary, int first_pick) {
  require_process_size(n);
  if (green_boundary < 0 || green_boundary >= first_pick || first_pick > n) {
    throw std::domain_error("intervals_for: requires 0 <= boundary < first pick <= n");
  }
  return IntervalTriple{green_boundary, first_pick - green_boundary - 1, n - first_pick};
}

std::vector<IntervalTriple> enumerate_triples(int n) {
  require_process_size(n);
  std::vector<IntervalTriple> out;
  out.reserve(static_cast<std::size_t>(n + 1) * n / 2);
  for (int boundary = 0; boundary <= n; ++boundary) {
    for (int pick = boundary + 1; pick <= n; ++pick) {
      out.push_back(intervals_for(n, boundary, pick));
    }
  }
  return out;
}

ExpectedLengths expected_lengths(int n) {
  require_process_size(n);
  BigInt sum_green = 0, sum_mid = 0, sum_right = 0;
  BigInt pairs = 0;
  for (int boundary = 0; boundary <= n; ++boundary) {
    for (int pick = boundary + 1; pick <= n; ++pick) {
      const IntervalTriple t = intervals_for(n, boundary, pick);
      sum_green += t.green_left;
      sum_mid += t.red_mid;
      sum_right += t.red_right;
      ++pairs;
    }
  }
  return ExpectedLengths{Rational(sum_green, pairs), Rational(sum_mid, pairs),
                         Rational(sum_right, pairs)};
}

Rational symmetry_answer(int n) {
  require_process_size(n);
  // For each (boundary, pick) pair, count the second picks landing on a red
  // ball among the n-1 admissible positions.
  BigInt red_landings = 0;
  BigInt pairs = 0;
  for (int boundary = 0; boundary <= n; ++boundary) {
    for (int pick = boundary + 1; pick <= n; ++pick) {
      const IntervalTriple t = intervals_for(n, boundary, pick);
      red_landings += t.red_mid + t.red_right;
      ++pairs;
    }
  }
  return Rational(red_landings, pairs * (n - 1));
}

Rational symmetry_answer_via_expectation(int n) {
  const ExpectedLengths e = expected_lengths(n);
  return (e.red_mid + e.red_right) / Rational(n - 1);
}

}  // namespace urnlab
