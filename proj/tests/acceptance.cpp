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

// Acceptance gate: one self-contained check per release criterion, each
// printed as a single pass/fail line. Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <tuple>

#include "oracles.hpp"
#include "urnlab/combinatorics.hpp"
#include "urnlab/induction.hpp"
#include "urnlab/monte_carlo.hpp"
#include "urnlab/paradox.hpp"
#include "urnlab/symmetry.hpp"
#include "urnlab/urn_models.hpp"

namespace {

using urnlab::BigInt;
using urnlab::Rational;

int failures = 0;

/// Runs one criterion, enforcing the time budget when one is given
/// (budget_ms <= 0 means untimed).
void criterion(int index, const char* label, double budget_ms,
               const std::function<bool()>& body) {
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body();
  } catch (const std::exception& e) {
    std::printf("[FAIL] criterion %2d: %s (exception: %s)\n", index, label,
                e.what());
    ++failures;
    return;
  }
  auto stop = std::chrono::steady_clock::now();
  double ms = std::chrono::duration<double, std::milli>(stop - start).count();
  bool within_budget = budget_ms <= 0.0 || ms <= budget_ms;
  if (ok && within_budget) {
    std::printf("[PASS] criterion %2d: %s (%.1f ms)\n", index, label, ms);
  } else {
    std::printf("[FAIL] criterion %2d: %s (%.1f ms%s)\n", index, label, ms,
                within_budget ? "" : ", over budget");
    ++failures;
  }
}

bool headline_result() {
  Rational expected(2, 3);
  return urnlab::weighted_prior_answer(100) == expected &&
         urnlab::conditional_ratio_answer(100).answer == expected &&
         urnlab::symmetry_answer(100) == expected &&
         urnlab::inductive_answer(100) == expected;
}

bool incorrect_model_result() {
  return urnlab::uniform_prior_answer(100) == Rational(1, 2);
}

bool n_independence() {
  for (int n = 2; n <= 200; ++n) {
    Rational expected(2, 3);
    if (urnlab::weighted_prior_answer(n) != expected) return false;
    if (urnlab::conditional_ratio_answer(n).answer != expected) return false;
    if (urnlab::symmetry_answer(n) != expected) return false;
    if (urnlab::inductive_answer(n) != expected) return false;
    if (urnlab::uniform_prior_answer(n) != Rational(1, 2)) return false;
  }
  return true;
}

bool conditional_decomposition() {
  urnlab::ConditionalRatio ratio = urnlab::conditional_ratio_answer(100);
  return ratio.first_red == Rational(1, 2) &&
         ratio.both_red == Rational(1, 3) && ratio.answer == Rational(2, 3);
}

bool induction_machinery() {
  std::array<Rational, 3> thirds = {Rational(1, 3), Rational(1, 3),
                                    Rational(1, 3)};
  urnlab::SampleTally rolling = urnlab::base_case_tally();
  for (int n = 2; n <= 300; ++n) {
    urnlab::ExtensionGroups groups = urnlab::extension_groups(n);
    BigInt triangle = urnlab::triangular_count(n);
    if (groups.new_green_old_green != triangle) return false;
    if (groups.new_green_old_red != triangle) return false;
    if (groups.new_red_pairs != triangle) return false;

    if (rolling.counts != urnlab::tally_direct(n).counts) return false;
    if (urnlab::multiset_distribution(n) != thirds) return false;
    rolling = urnlab::extend_tally(rolling);
  }
  // The last extension lands on size 301; it must agree as well.
  return rolling.counts == urnlab::tally_direct(301).counts;
}

bool symmetry_bijection() {
  auto triples = urnlab::enumerate_triples(100);
  std::multiset<std::tuple<int, int, int>> seen;
  for (const urnlab::IntervalTriple& t : triples) {
    seen.insert({t.green_left, t.red_mid, t.red_right});
  }
  std::multiset<std::tuple<int, int, int>> expected;
  for (int a = 0; a <= 99; ++a) {
    for (int b = 0; a + b <= 99; ++b) expected.insert({a, b, 99 - a - b});
  }
  if (seen != expected) return false;

  urnlab::ExpectedLengths lengths = urnlab::expected_lengths(100);
  return lengths.green_left == Rational(33) &&
         lengths.red_mid == Rational(33) &&
         lengths.red_right == Rational(33) &&
         lengths.red_mid + lengths.red_right == Rational(66);
}

bool combinatorial_identities() {
  for (int n = 0; n <= 500; ++n) {
    BigInt by_loop = urnlab::oracles::loop_sum_squares(n);
    if (urnlab::square_pyramidal_count(n) != by_loop) return false;
    if (urnlab::square_pyramidal(n) != Rational(by_loop, 1)) return false;
  }
  return urnlab::hockey_stick_sum(2, 100) == urnlab::binomial(101, 3) &&
         urnlab::binomial(101, 3) == Rational(166650);
}

bool oracle_equivalence() {
  for (int n = 2; n <= 12; ++n) {
    int longest = std::min(4, n - 1);
    for (int length = 0; length <= longest; ++length) {
      for (const urnlab::DrawSequence& prefix :
           urnlab::oracles::all_prefixes_of_length(length)) {
        if (urnlab::next_red_given_prefix(n, prefix) !=
            urnlab::oracles::oracle_next_red(n, prefix)) {
          return false;
        }
      }
    }
  }
  return true;
}

bool monte_carlo_consistency() {
  using urnlab::ModelSpec;
  using urnlab::ProcessKind;
  const ModelSpec models[] = {
      ModelSpec(ProcessKind::kUniformCompositionTwoDraws, 100),
      ModelSpec(ProcessKind::kWeightedRedPick, 100),
      ModelSpec(ProcessKind::kSymmetryThreeStep, 100)};
  for (const ModelSpec& model : models) {
    urnlab::SimulationReport report = urnlab::estimate(
        model, urnlab::kDefaultTrials, urnlab::kDefaultSeed, 4.0);
    if (!report.conditional.verdict) return false;
    if (!report.conditioning_check.verdict) return false;

    // Reruns are bit-identical: repeat and compare every reported field.
    urnlab::SimulationReport again = urnlab::estimate(
        model, urnlab::kDefaultTrials, urnlab::kDefaultSeed, 4.0);
    if (again.conditioning_hits != report.conditioning_hits) return false;
    if (again.ordered_counts != report.ordered_counts) return false;
    if (again.conditional.estimate != report.conditional.estimate) return false;
    if (again.conditional.z_score != report.conditional.z_score) return false;
    if (again.conditioning_check.estimate !=
        report.conditioning_check.estimate) {
      return false;
    }
  }
  urnlab::FrequencyTable table = urnlab::frequency_table(
      models[0], urnlab::kDefaultTrials, urnlab::kDefaultSeed);
  return table.chi_square <
         urnlab::chi_square_quantile(table.degrees_of_freedom, 0.999);
}

bool catalog_answers() {
  return urnlab::evaluate(urnlab::bertrand_box()) == Rational(2, 3) &&
         urnlab::evaluate(urnlab::boy_girl_older_known()) == Rational(1, 2) &&
         urnlab::evaluate(urnlab::boy_girl_at_least_one()) == Rational(1, 3);
}

}  // namespace

int main() {
  criterion(1,
            "headline result: all four solvers return exactly 2/3 at n = 100",
            1000.0, headline_result);
  criterion(2, "incorrect-model result: uniform-prior solver returns 1/2",
            0.0, incorrect_model_result);
  criterion(3, "n-independence: answers hold exactly for every n in 2..200",
            10000.0, n_independence);
  criterion(4, "conditional decomposition: Pr[first red] = 1/2, Pr[both] = 1/3",
            0.0, conditional_decomposition);
  criterion(5,
            "induction machinery: extension groups n(n+1)/2 and thirds "
            "distribution for n in 2..300, induction vs direct sum",
            0.0, induction_machinery);
  criterion(6,
            "symmetry bijection: triples at n = 100 hit each sum-99 triple "
            "once; expected lengths (33, 33, 33), tail expectation 66",
            0.0, symmetry_bijection);
  criterion(7,
            "combinatorial identities: square-pyramidal sums to n = 500 and "
            "hockey stick C(101,3)",
            0.0, combinatorial_identities);
  criterion(8,
            "oracle equivalence: prefix solver matches brute-force "
            "enumeration for n in 2..12, prefixes up to length 4",
            30000.0, oracle_equivalence);
  criterion(9,
            "Monte Carlo consistency: million-trial runs within 4 SE, "
            "chi-square below its 0.999 quantile, bit-identical reruns",
            30000.0, monte_carlo_consistency);
  criterion(10, "catalog answers: 2/3, 1/2, and 1/3 exactly", 0.0,
            catalog_answers);

  if (failures == 0) {
    std::printf("all 10 criteria passed\n");
    return 0;
  }
  std::printf("%d criteria failed\n", failures);
  return 1;
}
