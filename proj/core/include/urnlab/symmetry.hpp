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

#ifndef URNLAB_SYMMETRY_HPP_
#define URNLAB_SYMMETRY_HPP_

#include <vector>

#include "urnlab/rational.hpp"

namespace urnlab {

// Three-step index process over a row of n balls:
//   1. green_boundary uniform on {0..n}; balls 1..green_boundary are green,
//      the rest red.
//   2. first_pick uniform on {green_boundary+1..n}; a red ball, removed.
//   3. second_pick uniform on {1..n} minus {first_pick}.
struct IndexProcess {
  int n;
  int green_boundary;  // i: 0 <= i < first_pick
  int first_pick;      // j: i < j <= n
  int second_pick;     // k: 1 <= k <= n, k != j

  IndexProcess(int n, int green_boundary, int first_pick, int second_pick);

  /// The step-3 ball is red exactly when it lies right of the boundary.
  bool second_pick_is_red() const { return second_pick > green_boundary; }
};

/// Lengths of the three intervals a (boundary, first-pick) choice cuts the
/// row into: greens left of the boundary, reds strictly between boundary and
/// pick, reds right of the pick. Components always sum to n-1 (the picked
/// ball itself is excluded).
struct IntervalTriple {
  int green_left;
  int red_mid;
  int red_right;

  friend auto operator<=>(const IntervalTriple&, const IntervalTriple&) = default;
};

/// The triple for a concrete (green_boundary, first_pick) choice; requires
/// 0 <= green_boundary < first_pick <= n.
IntervalTriple intervals_for(int n, int green_boundary, int first_pick);

/// Triples for every admissible (boundary, pick) pair, in lexicographic pair
/// order. The result is a bijection onto the non-negative integer triples
/// summing to n-1: every such triple appears exactly once.
std::vector<IntervalTriple> enumerate_triples(int n);

struct ExpectedLengths {
  Rational green_left;
  Rational red_mid;
  Rational red_right;
};

/// Exact per-component average over enumerate_triples(n).
/// All three components equal (n-1)/3.
ExpectedLengths expected_lengths(int n);

/// Probability the step-3 pick is red, by exact counting of second-pick
/// landings over all (boundary, pick) pairs. Equals 2/3 for every n >= 2.
Rational symmetry_answer(int n);

/// The same probability via expected interval lengths:
/// (E[red_mid] + E[red_right]) / (n-1). Exposed so both derivations can be
/// checked against each other.
Rational symmetry_answer_via_expectation(int n);

}  // namespace urnlab

#endif  // URNLAB_SYMMETRY_HPP_
