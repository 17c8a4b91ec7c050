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

#ifndef URNLAB_MONTE_CARLO_HPP_
#define URNLAB_MONTE_CARLO_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "urnlab/rational.hpp"

namespace urnlab {

/// The three sampling processes backed by exact solvers.
enum class ProcessKind {
  kUniformCompositionTwoDraws,  // composition uniform on {0..n}, two draws
  kWeightedRedPick,             // uniform red ball across urns U_1..U_n
  kSymmetryThreeStep,           // boundary/pick index process
};

std::string_view process_name(ProcessKind kind);

/// Accepts the canonical names plus short aliases; empty optional otherwise.
std::optional<ProcessKind> parse_process_name(std::string_view name);

struct ModelSpec {
  ProcessKind kind;
  int urn_size;

  ModelSpec(ProcessKind process, int n);
};

/// Per-trial random stream. The values trial i consumes are a pure function
/// of (seed, i), so trials can run on any worker in any order and still
/// reproduce the serial run exactly.
class TrialStream {
 public:
  TrialStream(std::uint64_t seed, const ModelSpec& model,
              std::uint64_t trial_index);

  std::uint64_t seed() const { return seed_; }
  const ModelSpec& model() const { return model_; }
  std::uint64_t trial_index() const { return trial_index_; }

  /// Next 64 uniform bits (splitmix64 over a per-trial key).
  std::uint64_t next();

  /// Uniform integer in [0, bound) without modulo bias; bound >= 1.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t seed_;
  std::uint64_t trial_index_;
  std::uint64_t state_;
  ModelSpec model_;
};

struct TrialOutcome {
  bool conditioned;  // counts toward the conditional estimate
  bool first_red;
  bool second_red;
};

/// Runs trial i of the given model. Unconditioned trials are reported as-is,
/// never resampled, so every trial index costs a bounded amount of work.
TrialOutcome run_trial(const ModelSpec& model, std::uint64_t seed,
                       std::uint64_t trial_index);

/// Ordered-outcome cell for a trial: GG=0, GR=1, RG=2, RR=3.
inline int ordered_outcome_index(bool first_red, bool second_red) {
  return (first_red ? 2 : 0) + (second_red ? 1 : 0);
}

inline constexpr std::array<std::string_view, 4> kOrderedOutcomeLabels = {
    "GG", "GR", "RG", "RR"};

/// Pure counts; merging tallies is order-insensitive integer addition, which
/// is what makes any worker partition equal to the serial run.
struct TrialTally {
  std::uint64_t trials = 0;
  std::uint64_t conditioning_hits = 0;
  std::uint64_t successes = 0;  // conditioned trials whose second ball was red
  std::array<std::uint64_t, 4> ordered_counts{};

  void add(const TrialOutcome& outcome);
  TrialTally& merge(const TrialTally& other);
};

/// Runs trials [0, trials) and merges the per-worker tallies. workers <= 0
/// picks a count from the hardware; the result is identical for any value.
TrialTally tally_trials(const ModelSpec& model, std::uint64_t trials,
                        std::uint64_t seed, int workers = 0);

/// Fixed defaults so bare runs are reproducible. The seed spells "urnlab01".
inline constexpr std::uint64_t kDefaultSeed = 0x75726E6C61623031ULL;
inline constexpr std::uint64_t kDefaultTrials = 1'000'000;
inline constexpr double kDefaultZThreshold = 4.0;
inline constexpr double kChiSquareConfidence = 0.999;

/// Exact value the conditional estimate converges to (the matching solver).
Rational exact_conditional_target(const ModelSpec& model);

/// Exact probability that a trial is conditioned (1/2 for the two-draw
/// process, 1 for the always-conditioned ones).
Rational exact_conditioning_rate(const ModelSpec& model);

/// One estimated proportion checked against its exact target.
/// standard_error = sqrt(p(1-p)/m) with p the exact target and m the
/// effective sample count; verdict = pass iff |z_score| <= the threshold.
struct EstimateCheck {
  std::uint64_t sample_count = 0;
  double estimate = 0.0;
  Rational exact_target;
  double standard_error = 0.0;
  double z_score = 0.0;
  bool verdict = false;
};

struct SimulationReport {
  ModelSpec model;
  std::uint64_t trials;
  std::uint64_t seed;
  double z_threshold;
  std::uint64_t conditioning_hits;
  std::array<std::uint64_t, 4> ordered_counts;

  EstimateCheck conditional;         // success frequency among conditioned
  EstimateCheck conditioning_check;  // conditioned fraction among all trials

  bool passed() const { return conditional.verdict && conditioning_check.verdict; }
};

/// Runs the model and checks the estimates. Deterministic given
/// (model, trials, seed). Throws estimation_error when no trial was
/// conditioned, rather than reporting a silent NaN.
SimulationReport estimate(const ModelSpec& model, std::uint64_t trials,
                          std::uint64_t seed,
                          double z_threshold = kDefaultZThreshold,
                          int workers = 0);

/// Empirical ordered-outcome distribution with a Pearson chi-square statistic
/// against the exact targets (1/3, 1/6, 1/6, 1/3), 3 degrees of freedom.
struct FrequencyTable {
  std::uint64_t trials;
  std::array<std::uint64_t, 4> observed;     // GG, GR, RG, RR
  std::array<Rational, 4> expected_probability;
  std::array<double, 4> frequency;
  double chi_square = 0.0;
  int degrees_of_freedom = 3;
};

/// Only the two-draw process has unconditioned ordered outcomes to compare;
/// other kinds throw std::domain_error.
FrequencyTable frequency_table(const ModelSpec& model, std::uint64_t trials,
                               std::uint64_t seed, int workers = 0);

/// Quantile of the chi-square distribution, recomputed rather than embedded.
double chi_square_quantile(int degrees_of_freedom, double probability);

}  // namespace urnlab

#endif  // URNLAB_MONTE_CARLO_HPP_
