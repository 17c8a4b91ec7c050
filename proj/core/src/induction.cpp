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

#include "urnlab/induction.hpp"

#include <stdexcept>

#include "urnlab/combinatorics.hpp"

namespace urnlab {

namespace {

void check_family_size(int n) {
  if (n < 2) throw std::domain_error("urn family needs size >= 2");
}

}  // namespace

SampleTally base_case_tally() {
  // Three urns (0, 1, or 2 reds), each with exactly one two-ball sample.
  SampleTally tally;
  tally.urn_size = 2;
  tally.counts = {BigInt(1), BigInt(1), BigInt(1)};
  return tally;
}

ExtensionGroups extension_groups(int n) {
  check_family_size(n);
  ExtensionGroups groups{BigInt(0), BigInt(0), BigInt(0)};
  // Each urn U_{n,x} gains one green ball; pairing it with each old ball
  // gives n-x all-green and x mixed samples per urn.
  for (int x = 0; x <= n; ++x) {
    groups.new_green_old_green += n - x;
    groups.new_green_old_red += x;
  }
  // The brand-new all-red urn contributes every pair of its n+1 balls.
  for (int ball = 1; ball <= n; ++ball) {
    groups.new_red_pairs += ball;
  }
  return groups;
}

SampleTally extend_tally(const SampleTally& tally) {
  ExtensionGroups groups = extension_groups(tally.urn_size);
  SampleTally next;
  next.urn_size = tally.urn_size + 1;
  next.counts[0] = tally.counts[0] + groups.new_green_old_green;
  next.counts[1] = tally.counts[1] + groups.new_green_old_red;
  next.counts[2] = tally.counts[2] + groups.new_red_pairs;
  return next;
}

SampleTally tally_by_induction(int n) {
  check_family_size(n);
  SampleTally tally = base_case_tally();
  while (tally.urn_size < n) tally = extend_tally(tally);
  return tally;
}

SampleTally tally_direct(int n) {
  check_family_size(n);
  SampleTally tally;
  tally.urn_size = n;
  for (int x = 0; x <= n; ++x) {
    for (int j = 0; j <= 2; ++j) {
      tally.counts[j] += binomial_count(x, j) * binomial_count(n - x, 2 - j);
    }
  }
  return tally;
}

FamilyBallCounts family_ball_counts(int n) {
  check_family_size(n);
  FamilyBallCounts totals{BigInt(0), BigInt(0)};
  for (int x = 0; x <= n; ++x) {
    totals.red += x;
    totals.green += n - x;
  }
  return totals;
}

std::array<Rational, 3> multiset_distribution(int n) {
  SampleTally tally = tally_by_induction(n);
  BigInt total = tally.total();
  return {Rational(tally.counts[0], total), Rational(tally.counts[1], total),
          Rational(tally.counts[2], total)};
}

OrderedOutcomeDist ordered_distribution(int n) {
  std::array<Rational, 3> multiset = multiset_distribution(n);
  Rational half_mixed = multiset[1] / Rational(2);
  return OrderedOutcomeDist{multiset[0], half_mixed, half_mixed, multiset[2]};
}

Rational inductive_answer(int n) {
  OrderedOutcomeDist dist = ordered_distribution(n);
  return dist.red_red / (dist.red_red + dist.red_green);
}

std::vector<UrnComposition> reduced_family(int n) {
  check_family_size(n);
  std::vector<UrnComposition> urns;
  urns.reserve(static_cast<size_t>(n));
  // Drop the all-green urn, then remove one red ball from each survivor.
  for (int x = 1; x <= n; ++x) {
    urns.emplace_back(n - 1, x - 1);
  }
  return urns;
}

Rational reduced_collection_red_fraction(int n) {
  std::vector<UrnComposition> urns = reduced_family(n);
  // The reduction must reproduce the full family one size down, urn for urn.
  if (urns.size() != static_cast<size_t>(n)) {
    throw std::logic_error("reduced family has the wrong number of urns");
  }
  for (int y = 0; y < n; ++y) {
    if (urns[static_cast<size_t>(y)] != UrnComposition(n - 1, y)) {
      throw std::logic_error("reduced family does not match the smaller family");
    }
  }
  BigInt red = 0;
  BigInt balls = 0;
  for (const UrnComposition& urn : urns) {
    red += urn.reds;
    balls += urn.total;
  }
  return Rational(red, balls);
}

}  // namespace urnlab
