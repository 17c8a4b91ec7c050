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

#include <benchmark/benchmark.h>

#include "urnlab/induction.hpp"
#include "urnlab/monte_carlo.hpp"
#include "urnlab/rational.hpp"
#include "urnlab/symmetry.hpp"
#include "urnlab/urn_models.hpp"

namespace {

void BM_WeightedPriorAnswer(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(urnlab::weighted_prior_answer(n));
  }
}
BENCHMARK(BM_WeightedPriorAnswer)->Arg(100)->Arg(1000)->Arg(10000);

void BM_ConditionalRatioAnswer(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(urnlab::conditional_ratio_answer(n));
  }
}
BENCHMARK(BM_ConditionalRatioAnswer)->Arg(100)->Arg(1000)->Arg(10000);

void BM_SymmetryAnswer(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(urnlab::symmetry_answer(n));
  }
}
BENCHMARK(BM_SymmetryAnswer)->Arg(100)->Arg(1000);

void BM_InductiveAnswer(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(urnlab::inductive_answer(n));
  }
}
BENCHMARK(BM_InductiveAnswer)->Arg(100)->Arg(1000);

void BM_NextRedGivenPrefix(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  urnlab::DrawSequence prefix = urnlab::parse_draws("RRGR");
  for (auto _ : state) {
    benchmark::DoNotOptimize(urnlab::next_red_given_prefix(n, prefix));
  }
}
BENCHMARK(BM_NextRedGivenPrefix)->Arg(100)->Arg(1000);

void BM_DecimalString(benchmark::State& state) {
  urnlab::Rational value(2, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(urnlab::decimal_string(value));
  }
}
BENCHMARK(BM_DecimalString);

void BM_TallyTrialsSerial(benchmark::State& state) {
  urnlab::ModelSpec model(urnlab::ProcessKind::kUniformCompositionTwoDraws,
                          100);
  auto trials = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        urnlab::tally_trials(model, trials, urnlab::kDefaultSeed, 1));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          state.range(0));
}
BENCHMARK(BM_TallyTrialsSerial)->Arg(100000);

void BM_TallyTrialsParallel(benchmark::State& state) {
  urnlab::ModelSpec model(urnlab::ProcessKind::kUniformCompositionTwoDraws,
                          100);
  auto trials = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        urnlab::tally_trials(model, trials, urnlab::kDefaultSeed, 0));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          state.range(0));
}
BENCHMARK(BM_TallyTrialsParallel)->Arg(100000)->Arg(1000000);

}  // namespace

BENCHMARK_MAIN();
