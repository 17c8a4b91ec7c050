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

#ifndef URNLAB_INDUCTION_HPP_
#define URNLAB_INDUCTION_HPP_

#include <array>
#include <vector>

#include "urnlab/rational.hpp"
#include "urnlab/urn_models.hpp"

namespace urnlab {

/// Census of all two-ball samples across the urn family U_{n,0}..U_{n,n},
/// bucketed by the number of red balls in the sample. Counts are exact
/// integers; the total is always (n+1) * C(n,2).
struct SampleTally {
  int urn_size = 2;
  std::array<BigInt, 3> counts{};  // index = reds in the sample

  BigInt total() const { return counts[0] + counts[1] + counts[2]; }
};

/// The n=2 family: one sample per urn, one of each kind.
SampleTally base_case_tally();

/// Sizes of the three groups of samples that involve a ball added when the
/// family grows from size n to n+1 (one green ball per existing urn, plus the
/// all-new all-red urn). Each group has exactly n(n+1)/2 members; the counts
/// here are obtained by summation over the family, not from that closed form.
struct ExtensionGroups {
  BigInt new_green_old_green;  // samples with 0 red
  BigInt new_green_old_red;    // samples with 1 red
  BigInt new_red_pairs;        // samples with 2 reds, all from the new urn
};

ExtensionGroups extension_groups(int n);

/// Grows a tally one size step: old-ball samples carry over, new-ball samples
/// come from extension_groups.
SampleTally extend_tally(const SampleTally& tally);

/// Tally at size n reached by iterating extend_tally from the base case.
SampleTally tally_by_induction(int n);

/// Independent route: per-urn hypergeometric counts C(x,j) * C(n-x,2-j)
/// summed over the family. Used to cross-check the induction.
SampleTally tally_direct(int n);

/// Red and green ball totals across the whole family at size n, by summation.
/// Both equal n(n+1)/2.
struct FamilyBallCounts {
  BigInt red;
  BigInt green;
};

FamilyBallCounts family_ball_counts(int n);

/// Distribution of the two-ball sample's red count when the urn is chosen
/// uniformly from the family: (1/3, 1/3, 1/3) for every n >= 2.
std::array<Rational, 3> multiset_distribution(int n);

/// Unordered samples split into their two equally likely orderings.
struct OrderedOutcomeDist {
  Rational green_green;  // 1/3
  Rational green_red;    // 1/6
  Rational red_green;    // 1/6
  Rational red_red;      // 1/3
};

OrderedOutcomeDist ordered_distribution(int n);

/// Pr[second red | first red] from the ordered distribution: 2/3.
Rational inductive_answer(int n);

/// The family at size n with urn U_{n,0} removed and one red ball taken from
/// each remaining urn; structurally identical to the full family at size n-1.
std::vector<UrnComposition> reduced_family(int n);

/// Fraction of red balls in reduced_family(n). Equals 1/2 for every n >= 2;
/// verifies the structural identity with the size-(n-1) family along the way.
Rational reduced_collection_red_fraction(int n);

}  // namespace urnlab

#endif  // URNLAB_INDUCTION_HPP_
