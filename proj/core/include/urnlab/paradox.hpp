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

#ifndef URNLAB_PARADOX_HPP_
#define URNLAB_PARADOX_HPP_

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "urnlab/rational.hpp"

namespace urnlab {

/// One point of a scenario's outcome space.
struct Outcome {
  std::string label;
  Rational probability;
};

/// A conditional-probability puzzle over a finite labeled outcome space.
/// Construction checks that probabilities are non-negative and sum to 1;
/// whether the conditioning event has positive mass is checked by evaluate.
struct Scenario {
  using Predicate = std::function<bool(std::string_view)>;

  std::string name;     // stable identifier, e.g. "bertrand-box"
  std::string summary;  // one-line human description
  std::vector<Outcome> outcomes;
  Predicate conditioning_event;
  Predicate target_event;

  Scenario(std::string name, std::string summary, std::vector<Outcome> outcomes,
           Predicate conditioning_event, Predicate target_event);
};

/// Pr[target | conditioning] = Pr[target and conditioning] / Pr[conditioning],
/// exactly. Throws conditioning_error when the conditioning event has no mass.
Rational evaluate(const Scenario& scenario);

/// Two-ball urn with 0, 1, or 2 red balls equally likely (a box with two
/// gold, two silver, or one of each): ordered outcomes (1/3, 1/6, 1/6, 1/3);
/// given a red first ball, the second is red with probability 2/3.
Scenario bertrand_box();

/// Two children as an ordered (older, younger) pair, all four combinations
/// equally likely; given the older is a girl, both are girls with
/// probability 1/2.
Scenario boy_girl_older_known();

/// Same ordered-pair space; given at least one boy, both are boys with
/// probability 1/3. (The well-known 1/2 reading corresponds to a different,
/// unmodeled way of learning the fact; only this sampling model is encoded.)
Scenario boy_girl_at_least_one();

/// All built-in scenarios, in catalog order.
std::vector<Scenario> all_scenarios();

/// Finds a built-in scenario by its stable name.
std::optional<Scenario> find_scenario(std::string_view name);

}  // namespace urnlab

#endif  // URNLAB_PARADOX_HPP_
