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

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "output.hpp"
#include "urnlab/errors.hpp"
#include "urnlab/induction.hpp"
#include "urnlab/monte_carlo.hpp"
#include "urnlab/paradox.hpp"
#include "urnlab/symmetry.hpp"
#include "urnlab/urn_models.hpp"

namespace {

using urnlab::Rational;
using urnlab::cli::Format;
using urnlab::cli::OutputRecord;

const std::vector<std::string> kMethods = {
    "weighted-prior", "conditional", "symmetry", "inductive", "uniform-prior"};

const std::vector<std::string> kModelNames = {
    "uniform-composition-two-draws",
    "uniform-composition",
    "uniform",
    "weighted-red-pick",
    "weighted",
    "symmetry-three-step",
    "symmetry"};

Rational solve(const std::string& method, int n) {
  if (method == "uniform-prior") return urnlab::uniform_prior_answer(n);
  if (method == "weighted-prior") return urnlab::weighted_prior_answer(n);
  if (method == "conditional") return urnlab::conditional_ratio_answer(n).answer;
  if (method == "symmetry") return urnlab::symmetry_answer(n);
  if (method == "inductive") return urnlab::inductive_answer(n);
  throw std::invalid_argument("unknown method: " + method);
}

void emit(const OutputRecord& record, const std::string& format_name) {
  Format format = *urnlab::cli::parse_format(format_name);
  std::fputs(urnlab::cli::render(record, format).c_str(), stdout);
}

int run_exact(int n, const std::string& method, const std::string& format) {
  OutputRecord record;
  record.command = "exact";
  record.parameters = {{"n", n}, {"method", method}};
  if (method == "all") {
    for (const std::string& name : kMethods) {
      record.results.push_back({name, solve(name, n)});
    }
    // The first four model the stated draw; uniform-prior answers a
    // different question (composition believed uniform after a red draw).
    bool agree = true;
    for (int i = 1; i < 4; ++i) {
      agree = agree && record.results[static_cast<std::size_t>(i)].value ==
                           record.results[0].value;
    }
    record.agreement = agree;
    emit(record, format);
    return agree ? 0 : 1;
  }
  record.results.push_back({method, solve(method, n)});
  emit(record, format);
  return 0;
}

int run_prefix(int n, const std::string& prefix, bool show_posterior,
               const std::string& format) {
  urnlab::DrawSequence draws;
  try {
    draws = urnlab::parse_draws(prefix);
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError("--prefix", e.what());
  }
  if (draws.size() >= static_cast<std::size_t>(n)) {
    throw CLI::ValidationError(
        "--prefix", "prefix must leave at least one ball to draw (length < n)");
  }
  OutputRecord record;
  record.command = "prefix";
  record.parameters = {{"n", n}, {"prefix", prefix}};
  record.results.push_back(
      {"next_red", urnlab::next_red_given_prefix(n, draws)});
  if (show_posterior) {
    auto posterior = urnlab::posterior_given_prefix(
        urnlab::CompositionPrior::uniform(n), draws);
    std::vector<urnlab::cli::PosteriorRow> rows;
    for (const auto& [reds, weight] : posterior.weights()) {
      rows.push_back({reds, weight});
    }
    record.posterior = std::move(rows);
  }
  emit(record, format);
  return 0;
}

int run_simulate(const std::string& model_name, int n, std::uint64_t trials,
                 std::uint64_t seed, double z_threshold,
                 const std::string& format) {
  auto kind = urnlab::parse_process_name(model_name);
  if (!kind) throw CLI::ValidationError("--model", "unknown model name");
  urnlab::ModelSpec model(*kind, n);
  urnlab::SimulationReport report =
      urnlab::estimate(model, trials, seed, z_threshold);

  OutputRecord record;
  record.command = "simulate";
  record.parameters = {{"model", std::string(urnlab::process_name(*kind))},
                       {"n", n},
                       {"trials", trials},
                       {"seed", seed},
                       {"z_threshold", z_threshold}};
  record.simulation = report;
  emit(record, format);
  return report.passed() ? 0 : 1;
}

int run_sweep(int n_min, int n_max, const std::string& method,
              const std::string& format) {
  if (n_min > n_max) {
    throw CLI::ValidationError("--min", "range is empty (min > max)");
  }
  OutputRecord record;
  record.command = "sweep";
  record.parameters = {{"min", n_min}, {"max", n_max}, {"method", method}};
  for (int n = n_min; n <= n_max; ++n) {
    record.sweep_rows.push_back({n, method, solve(method, n)});
  }
  emit(record, format);
  return 0;
}

int run_catalog(const std::string& scenario_name, const std::string& format) {
  std::vector<urnlab::Scenario> picked;
  if (scenario_name.empty()) {
    picked = urnlab::all_scenarios();
  } else {
    auto found = urnlab::find_scenario(scenario_name);
    if (!found) {
      std::string names;
      for (const urnlab::Scenario& s : urnlab::all_scenarios()) {
        names += (names.empty() ? "" : ", ") + s.name;
      }
      throw CLI::ValidationError("scenario", "unknown scenario '" +
                                                 scenario_name +
                                                 "'; valid names: " + names);
    }
    picked.push_back(std::move(*found));
  }
  OutputRecord record;
  record.command = "catalog";
  if (!scenario_name.empty()) {
    record.parameters = {{"scenario", scenario_name}};
  }
  for (const urnlab::Scenario& scenario : picked) {
    record.scenarios.push_back({scenario.name, scenario.summary,
                                scenario.outcomes,
                                urnlab::evaluate(scenario)});
  }
  emit(record, format);
  return 0;
}

void add_format_option(CLI::App* sub, std::string* format) {
  sub->add_option("--format", *format, "output format")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact and simulated answers for the random-composition urn puzzle: "
      "given a red first draw, how likely is a red second draw?"};
  app.require_subcommand(1);

  int exit_code = 0;
  constexpr int kMaxInt = std::numeric_limits<int>::max();

  // exact
  int exact_n = 0;
  std::string exact_method = "all";
  std::string exact_format = "json";
  CLI::App* exact = app.add_subcommand(
      "exact", "compute the exact answer by one or all methods");
  exact->add_option("--n", exact_n, "urn size")
      ->required()
      ->check(CLI::Range(2, kMaxInt));
  std::vector<std::string> exact_methods = kMethods;
  exact_methods.push_back("all");
  exact->add_option("--method", exact_method, "solver to run")
      ->check(CLI::IsMember(exact_methods))
      ->capture_default_str();
  add_format_option(exact, &exact_format);
  exact->callback(
      [&] { exit_code = run_exact(exact_n, exact_method, exact_format); });

  // prefix
  int prefix_n = 0;
  std::string prefix_draws;
  bool prefix_posterior = false;
  std::string prefix_format = "json";
  CLI::App* prefix = app.add_subcommand(
      "prefix", "probability the next draw is red after an observed prefix");
  prefix->add_option("--n", prefix_n, "urn size")
      ->required()
      ->check(CLI::Range(2, kMaxInt));
  prefix->add_option("--prefix", prefix_draws,
                     "observed draws, e.g. RRG (empty for none)");
  prefix->add_flag("--posterior", prefix_posterior,
                   "include the posterior over red counts");
  add_format_option(prefix, &prefix_format);
  prefix->callback([&] {
    exit_code =
        run_prefix(prefix_n, prefix_draws, prefix_posterior, prefix_format);
  });

  // simulate
  std::string sim_model;
  int sim_n = 0;
  std::uint64_t sim_trials = urnlab::kDefaultTrials;
  std::uint64_t sim_seed = urnlab::kDefaultSeed;
  double sim_z = urnlab::kDefaultZThreshold;
  std::string sim_format = "json";
  CLI::App* simulate = app.add_subcommand(
      "simulate", "run a sampling process and check it against the exact answer");
  simulate->add_option("--model", sim_model, "sampling process")
      ->required()
      ->check(CLI::IsMember(kModelNames));
  simulate->add_option("--n", sim_n, "urn size")
      ->required()
      ->check(CLI::Range(2, kMaxInt));
  simulate->add_option("--trials", sim_trials, "number of trials")
      ->check(CLI::PositiveNumber)
      ->envname("URNLAB_TRIALS")
      ->capture_default_str();
  simulate->add_option("--seed", sim_seed, "64-bit seed")
      ->envname("URNLAB_SEED")
      ->capture_default_str();
  simulate->add_option("--z-threshold", sim_z, "pass/fail z-score bound")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_format_option(simulate, &sim_format);
  simulate->callback([&] {
    exit_code =
        run_simulate(sim_model, sim_n, sim_trials, sim_seed, sim_z, sim_format);
  });

  // sweep
  int sweep_min = 0;
  int sweep_max = 0;
  std::string sweep_method = "weighted-prior";
  std::string sweep_format = "json";
  CLI::App* sweep = app.add_subcommand(
      "sweep", "exact answer for every urn size in a range");
  sweep->add_option("--min", sweep_min, "smallest urn size")
      ->required()
      ->check(CLI::Range(2, kMaxInt));
  sweep->add_option("--max", sweep_max, "largest urn size")
      ->required()
      ->check(CLI::Range(2, kMaxInt));
  sweep->add_option("--method", sweep_method, "solver to run")
      ->check(CLI::IsMember(kMethods))
      ->capture_default_str();
  add_format_option(sweep, &sweep_format);
  sweep->callback([&] {
    exit_code = run_sweep(sweep_min, sweep_max, sweep_method, sweep_format);
  });

  // catalog
  std::string catalog_name;
  std::string catalog_format = "json";
  CLI::App* catalog = app.add_subcommand(
      "catalog", "classical conditional-probability puzzles with exact answers");
  catalog->add_option("scenario", catalog_name,
                      "scenario name (omit to list all)");
  add_format_option(catalog, &catalog_format);
  catalog->callback(
      [&] { exit_code = run_catalog(catalog_name, catalog_format); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const urnlab::conditioning_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const urnlab::estimation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
