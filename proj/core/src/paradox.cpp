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

#include "urnlab/paradox.hpp"

#include <stdexcept>
#include <utility>

#include "urnlab/errors.hpp"

namespace urnlab {

Scenario::Scenario(std::string name_in, std::string summary_in,
                   std::vector<Outcome> outcomes_in,
                   Predicate conditioning_in, Predicate target_in)
    : name(std::move(name_in)),
      summary(std::move(summary_in)),
      outcomes(std::move(outcomes_in)),
      conditioning_event(std::move(conditioning_in)),
      target_event(std::move(target_in)) {
  if (outcomes.empty()) {
    throw std::invalid_argument("Scenario: empty outcome space");
  }
  Rational total;
  for (const Outcome& outcome : outcomes) {
    if (outcome.probability < Rational(0)) {
      throw std::invalid_argument("Scenario: negative probability");
    }
    total += outcome.probability;
  }
  if (total != Rational(1)) {
    throw std::invalid_argument("Scenario: probabilities must sum to 1");
  }
  if (!conditioning_event || !target_event) {
    throw std::invalid_argument("Scenario: missing predicate");
  }
}

Rational evaluate(const Scenario& scenario) {
  Rational condition_mass;
  Rational joint_mass;
  for (const Outcome& outcome : scenario.outcomes) {
    if (!scenario.conditioning_event(outcome.label)) continue;
    condition_mass += outcome.probability;
    if (scenario.target_event(outcome.label)) {
      joint_mass += outcome.probability;
    }
  }
  if (condition_mass.is_zero()) {
    throw conditioning_error("evaluate: conditioning event '" + scenario.name +
                             "' has probability zero");
  }
  return joint_mass / condition_mass;
}

Scenario bertrand_box() {
  std::vector<Outcome> outcomes = {
      {"GG", Rational(1, 3)},
      {"GR", Rational(1, 6)},
      {"RG", Rational(1, 6)},
      {"RR", Rational(1, 3)},
  };
  return Scenario(
      "bertrand-box",
      "two-ball urn, red count 0/1/2 equally likely; first draw red, "
      "chance the second is red",
      std::move(outcomes),
      [](std::string_view label) { return label.front() == 'R'; },
      [](std::string_view label) { return label == "RR"; });
}

Scenario boy_girl_older_known() {
  // Ordered as (older, younger); the 1/2 answer depends on that slot order.
  std::vector<Outcome> outcomes = {
      {"BB", Rational(1, 4)},
      {"BG", Rational(1, 4)},
      {"GB", Rational(1, 4)},
      {"GG", Rational(1, 4)},
  };
  return Scenario(
      "boy-girl-older",
      "two children, older listed first; the older is a girl, chance both "
      "are girls",
      std::move(outcomes),
      [](std::string_view label) { return label.front() == 'G'; },
      [](std::string_view label) { return label == "GG"; });
}

Scenario boy_girl_at_least_one() {
  std::vector<Outcome> outcomes = {
      {"BB", Rational(1, 4)},
      {"BG", Rational(1, 4)},
      {"GB", Rational(1, 4)},
      {"GG", Rational(1, 4)},
  };
  return Scenario(
      "boy-girl-at-least-one",
      "two children; at least one is a boy, chance both are boys",
      std::move(outcomes),
      [](std::string_view label) {
        return label.find('B') != std::string_view::npos;
      },
      [](std::string_view label) { return label == "BB"; });
}

std::vector<Scenario> all_scenarios() {
  std::vector<Scenario> catalog;
  catalog.push_back(bertrand_box());
  catalog.push_back(boy_girl_older_known());
  catalog.push_back(boy_girl_at_least_one());
  return catalog;
}

std::optional<Scenario> find_scenario(std::string_view name) {
  for (Scenario& scenario : all_scenarios()) {
    if (scenario.name == name) return std::move(scenario);
  }
  return std::nullopt;
}

}  // namespace urnlab
