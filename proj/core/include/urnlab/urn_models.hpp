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

#ifndef URNLAB_URN_MODELS_HPP_
#define URNLAB_URN_MODELS_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "urnlab/errors.hpp"
#include "urnlab/rational.hpp"

namespace urnlab {

enum class Color : std::uint8_t { Red, Green };

/// Ordered record of observed ball colors.
using DrawSequence = std::vector<Color>;

/// Parses "RRG" (case-insensitive) into a DrawSequence; "" is the empty
/// sequence. Throws std::invalid_argument on any other character.
DrawSequence parse_draws(std::string_view text);
std::string draws_str(const DrawSequence& draws);

/// An urn with `total` balls of which `reds` are red; greens are implicit.
struct UrnComposition {
  int total = 1;
  int reds = 0;

  UrnComposition(int total_balls, int red_balls);

  int greens() const { return total - reds; }

  friend auto operator<=>(const UrnComposition&, const UrnComposition&) = default;
};

/// A probability distribution over red-ball counts for urns of a fixed size.
/// Weights are exact, non-negative, and sum to exactly 1; the support is the
/// set of keys (weights of zero are kept, e.g. after conditioning).
class CompositionPrior {
 public:
  CompositionPrior(int urn_size, std::map<int, Rational> weights);

  /// Equal weight on every red count in {lo..urn_size}.
  static CompositionPrior uniform(int urn_size, int lo = 0);

  int urn_size() const { return urn_size_; }
  const std::map<int, Rational>& weights() const { return weights_; }
  const Rational& weight(int reds) const;

 private:
  int urn_size_;
  std::map<int, Rational> weights_;
};

/// Probability the next ball is red after one red ball has been removed from
/// an urn of `n` balls, `x` of them red: (x-1)/(n-1).
/// Undefined (throws) when x = 0; removing a red ball requires one.
Rational per_urn_second_red(int n, int x);

/// Second-ball-red probability when the urn is chosen uniformly from the
/// n urns holding 1..n red balls and a red ball is then removed.
/// Equals 1/2 for every n >= 2.
Rational uniform_prior_answer(int n);

/// The distribution a uniform pick of one red ball induces over the urn
/// family U_1..U_n: weight 2x/(n(n+1)) on x reds.
CompositionPrior weighted_prior(int n);

/// Second-ball-red probability under weighted_prior, by direct summation.
/// Equals 2/3 for every n >= 2.
Rational weighted_prior_answer(int n);

/// Same value via the closed forms for sum-of-integers and sum-of-squares;
/// an algebraic cross-check on weighted_prior_answer.
Rational weighted_prior_answer_closed_form(int n);

struct ConditionalRatio {
  Rational first_red;  // Pr[first ball red]           = 1/2
  Rational both_red;   // Pr[both balls red]           = 1/3
  Rational answer;     // Pr[second red | first red]   = 2/3
};

/// The ratio formulation: red count uniform on {0..n}, two balls drawn
/// without replacement, answer = Pr[both red] / Pr[first red].
ConditionalRatio conditional_ratio_answer(int n);

/// Probability of observing exactly `draws` when drawing without replacement
/// from `urn`. Zero when the urn cannot produce the sequence.
Rational draw_sequence_probability(const UrnComposition& urn, const DrawSequence& draws);

/// Bayes update of `prior` on the evidence `prefix`. Compositions that cannot
/// produce the prefix keep an explicit weight of zero. Throws
/// conditioning_error when the prefix has probability zero under the whole
/// support.
CompositionPrior posterior_given_prefix(const CompositionPrior& prior,
                                        const DrawSequence& prefix);

/// Exact probability that the next draw is red, starting from the uniform
/// prior on {0..n} and conditioning on `prefix`: posterior update followed by
/// the exact mixture of per-urn next-draw probabilities.
Rational next_red_given_prefix(int n, const DrawSequence& prefix);

}  // namespace urnlab

#endif  // URNLAB_URN_MODELS_HPP_
