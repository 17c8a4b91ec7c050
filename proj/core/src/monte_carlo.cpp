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

#include "urnlab/monte_carlo.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

#include "urnlab/errors.hpp"
#include "urnlab/induction.hpp"
#include "urnlab/symmetry.hpp"
#include "urnlab/urn_models.hpp"

namespace urnlab {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Inverse of the triangular layout: red ball t (0-based), counted urn by
/// urn through U_1..U_n, lives in the urn u with (u-1)u/2 <= t < u(u+1)/2.
std::uint64_t triangular_urn(std::uint64_t t, std::uint64_t n) {
  auto u = static_cast<std::uint64_t>(
      (std::sqrt(8.0 * static_cast<double>(t) + 1.0) + 1.0) / 2.0);
  if (u < 1) u = 1;
  if (u > n) u = n;
  while (u > 1 && (u - 1) * u / 2 > t) --u;
  while (u * (u + 1) / 2 <= t) ++u;
  return u;
}

}  // namespace

std::string_view process_name(ProcessKind kind) {
  switch (kind) {
    case ProcessKind::kUniformCompositionTwoDraws:
      return "uniform-composition-two-draws";
    case ProcessKind::kWeightedRedPick:
      return "weighted-red-pick";
    case ProcessKind::kSymmetryThreeStep:
      return "symmetry-three-step";
  }
  throw std::logic_error("unknown process kind");
}

std::optional<ProcessKind> parse_process_name(std::string_view name) {
  if (name == "uniform-composition-two-draws" ||
      name == "uniform-composition" || name == "uniform") {
    return ProcessKind::kUniformCompositionTwoDraws;
  }
  if (name == "weighted-red-pick" || name == "weighted") {
    return ProcessKind::kWeightedRedPick;
  }
  if (name == "symmetry-three-step" || name == "symmetry") {
    return ProcessKind::kSymmetryThreeStep;
  }
  return std::nullopt;
}

ModelSpec::ModelSpec(ProcessKind process, int n) : kind(process), urn_size(n) {
  if (n < 2) throw std::domain_error("ModelSpec: urn size must be >= 2");
}

TrialStream::TrialStream(std::uint64_t seed, const ModelSpec& model,
                         std::uint64_t trial_index)
    : seed_(seed),
      trial_index_(trial_index),
      state_(mix64(seed ^ mix64(trial_index + kGolden))),
      model_(model) {}

std::uint64_t TrialStream::next() {
  state_ += kGolden;
  return mix64(state_);
}

std::uint64_t TrialStream::below(std::uint64_t bound) {
  if (bound == 0) throw std::domain_error("TrialStream::below: zero bound");
  // Reject the wrap-around remainder so every residue is equally likely.
  std::uint64_t threshold = (0 - bound) % bound;
  std::uint64_t r;
  do {
    r = next();
  } while (r < threshold);
  return r % bound;
}

TrialOutcome run_trial(const ModelSpec& model, std::uint64_t seed,
                       std::uint64_t trial_index) {
  TrialStream rng(seed, model, trial_index);
  const auto n = static_cast<std::uint64_t>(model.urn_size);
  switch (model.kind) {
    case ProcessKind::kUniformCompositionTwoDraws: {
      std::uint64_t x = rng.below(n + 1);
      bool first_red = rng.below(n) < x;
      std::uint64_t reds_left = x - (first_red ? 1 : 0);
      bool second_red = rng.below(n - 1) < reds_left;
      return TrialOutcome{first_red, first_red, second_red};
    }
    case ProcessKind::kWeightedRedPick: {
      // One red ball uniformly across U_1..U_n; urn u holds u of them.
      std::uint64_t u = triangular_urn(rng.below(n * (n + 1) / 2), n);
      bool second_red = rng.below(n - 1) < u - 1;
      return TrialOutcome{true, true, second_red};
    }
    case ProcessKind::kSymmetryThreeStep: {
      // (boundary, pick) uniform over pairs: pick j with weight j, then the
      // boundary uniformly below it.
      std::uint64_t j = triangular_urn(rng.below(n * (n + 1) / 2), n);
      std::uint64_t boundary = rng.below(j);
      // Third index uniform on {1..n} minus {j}.
      std::uint64_t m = 1 + rng.below(n - 1);
      std::uint64_t k = m < j ? m : m + 1;
      IndexProcess process(model.urn_size, static_cast<int>(boundary),
                           static_cast<int>(j), static_cast<int>(k));
      return TrialOutcome{true, true, process.second_pick_is_red()};
    }
  }
  throw std::logic_error("unknown process kind");
}

void TrialTally::add(const TrialOutcome& outcome) {
  ++trials;
  if (outcome.conditioned) {
    ++conditioning_hits;
    if (outcome.second_red) ++successes;
  }
  ++ordered_counts[static_cast<std::size_t>(
      ordered_outcome_index(outcome.first_red, outcome.second_red))];
}

TrialTally& TrialTally::merge(const TrialTally& other) {
  trials += other.trials;
  conditioning_hits += other.conditioning_hits;
  successes += other.successes;
  for (std::size_t i = 0; i < ordered_counts.size(); ++i) {
    ordered_counts[i] += other.ordered_counts[i];
  }
  return *this;
}

TrialTally tally_trials(const ModelSpec& model, std::uint64_t trials,
                        std::uint64_t seed, int workers) {
  if (workers <= 0) {
    unsigned hw = std::thread::hardware_concurrency();
    workers = static_cast<int>(hw == 0 ? 1 : hw);
    if (workers > 8) workers = 8;
  }
  auto worker_count = static_cast<std::uint64_t>(workers);
  if (worker_count > trials) worker_count = trials == 0 ? 1 : trials;

  std::vector<TrialTally> parts(worker_count);
  auto run_range = [&](std::uint64_t begin, std::uint64_t end,
                       TrialTally* out) {
    TrialTally local;
    for (std::uint64_t t = begin; t < end; ++t) {
      local.add(run_trial(model, seed, t));
    }
    *out = local;
  };

  if (worker_count <= 1) {
    run_range(0, trials, &parts[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(worker_count);
    std::uint64_t chunk = trials / worker_count;
    std::uint64_t rest = trials % worker_count;
    std::uint64_t begin = 0;
    for (std::uint64_t w = 0; w < worker_count; ++w) {
      std::uint64_t len = chunk + (w < rest ? 1 : 0);
      pool.emplace_back(run_range, begin, begin + len, &parts[w]);
      begin += len;
    }
    for (std::thread& t : pool) t.join();
  }

  TrialTally total;
  for (const TrialTally& part : parts) total.merge(part);
  return total;
}

Rational exact_conditional_target(const ModelSpec& model) {
  switch (model.kind) {
    case ProcessKind::kUniformCompositionTwoDraws:
      return conditional_ratio_answer(model.urn_size).answer;
    case ProcessKind::kWeightedRedPick:
      return weighted_prior_answer(model.urn_size);
    case ProcessKind::kSymmetryThreeStep:
      return symmetry_answer(model.urn_size);
  }
  throw std::logic_error("unknown process kind");
}

Rational exact_conditioning_rate(const ModelSpec& model) {
  if (model.kind == ProcessKind::kUniformCompositionTwoDraws) {
    return conditional_ratio_answer(model.urn_size).first_red;
  }
  return Rational(1);
}

namespace {

EstimateCheck make_check(std::uint64_t hits, std::uint64_t samples,
                         const Rational& target, double z_threshold) {
  EstimateCheck check;
  check.sample_count = samples;
  check.estimate =
      static_cast<double>(hits) / static_cast<double>(samples);
  check.exact_target = target;
  double p = target.to_double();
  check.standard_error =
      std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
  if (check.standard_error > 0.0) {
    check.z_score = (check.estimate - p) / check.standard_error;
  } else {
    check.z_score = check.estimate == p
                        ? 0.0
                        : std::numeric_limits<double>::infinity();
  }
  check.verdict = std::abs(check.z_score) <= z_threshold;
  return check;
}

}  // namespace

SimulationReport estimate(const ModelSpec& model, std::uint64_t trials,
                          std::uint64_t seed, double z_threshold,
                          int workers) {
  if (trials < 1) throw std::domain_error("estimate: trials must be >= 1");
  TrialTally tally = tally_trials(model, trials, seed, workers);
  if (tally.conditioning_hits == 0) {
    throw estimation_error(
        "estimate: no conditioned trials; cannot form a conditional estimate");
  }
  SimulationReport report{model,
                          trials,
                          seed,
                          z_threshold,
                          tally.conditioning_hits,
                          tally.ordered_counts,
                          {},
                          {}};
  report.conditional =
      make_check(tally.successes, tally.conditioning_hits,
                 exact_conditional_target(model), z_threshold);
  report.conditioning_check =
      make_check(tally.conditioning_hits, trials,
                 exact_conditioning_rate(model), z_threshold);
  return report;
}

FrequencyTable frequency_table(const ModelSpec& model, std::uint64_t trials,
                               std::uint64_t seed, int workers) {
  if (model.kind != ProcessKind::kUniformCompositionTwoDraws) {
    throw std::domain_error(
        "frequency_table: only the two-draw process has unconditioned "
        "ordered outcomes");
  }
  if (trials < 1) {
    throw std::domain_error("frequency_table: trials must be >= 1");
  }
  TrialTally tally = tally_trials(model, trials, seed, workers);
  OrderedOutcomeDist exact = ordered_distribution(model.urn_size);

  FrequencyTable table;
  table.trials = trials;
  table.observed = tally.ordered_counts;
  table.expected_probability = {exact.green_green, exact.green_red,
                                exact.red_green, exact.red_red};
  table.chi_square = 0.0;
  for (std::size_t cell = 0; cell < 4; ++cell) {
    double expected = table.expected_probability[cell].to_double() *
                      static_cast<double>(trials);
    double observed = static_cast<double>(table.observed[cell]);
    table.frequency[cell] = observed / static_cast<double>(trials);
    double diff = observed - expected;
    table.chi_square += diff * diff / expected;
  }
  table.degrees_of_freedom = 3;
  return table;
}

double chi_square_quantile(int degrees_of_freedom, double probability) {
  boost::math::chi_squared_distribution<double> dist(degrees_of_freedom);
  return boost::math::quantile(dist, probability);
}

}  // namespace urnlab
