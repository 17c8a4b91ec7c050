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

#include "urnlab/urn_models.hpp"

#include <cctype>
#include <utility>

#include "urnlab/combinatorics.hpp"

namespace urnlab {
namespace {

void require_urn_size(int n) {
  if (n < 2) throw std::domain_error("urn size must be at least 2");
}

}  // namespace

DrawSequence parse_draws(std::string_view text) {
  DrawSequence out;
  out.reserve(text.size());
  for (char c : text) {
    switch (std::toupper(static_cast<unsigned char>(c))) {
      case 'R': out.push_back(Color::Red); break;
      case 'G': out.push_back(Color::Green); break;
      default:
        throw std::invalid_argument(std::string("draw sequence: unexpected character '") +
                                    c + "' (expected R or G)");
    }
  }
  return out;
}

std::string draws_str(const DrawSequence& draws) {
  std::string out;
  out.reserve(draws.size());
  for (Color c : draws) out.push_back(c == Color::Red ? 'R' : 'G');
  return out;
}

UrnComposition::UrnComposition(int total_balls, int red_balls)
    : total(total_balls), reds(red_balls) {
  if (total < 1) throw std::domain_error("UrnComposition: need at least one ball");
  if (reds < 0 || reds > total) {
    throw std::domain_error("UrnComposition: red count out of range");
  }
}

CompositionPrior::CompositionPrior(int urn_size, std::map<int, Rational> weights)
    : urn_size_(urn_size), weights_(std::move(weights)) {
  if (urn_size_ < 1) throw std::domain_error("CompositionPrior: urn size must be positive");
  if (weights_.empty()) throw std::domain_error("CompositionPrior: empty support");
  Rational total;
  for (const auto& [reds, w] : weights_) {
    if (reds < 0 || reds > urn_size_) {
      throw std::domain_error("CompositionPrior: red count outside {0..n}");
    }
    if (w < Rational(0)) throw std::domain_error("CompositionPrior: negative weight");
    total += w;
  }
  if (total != Rational(1)) {
    throw std::domain_error("CompositionPrior: weights must sum to exactly 1");
  }
}

CompositionPrior CompositionPrior::uniform(int urn_size, int lo) {
  if (lo < 0 || lo > urn_size) throw std::domain_error("uniform prior: bad support");
  std::map<int, Rational> weights;
  const Rational each(1, urn_size - lo + 1);
  for (int x = lo; x <= urn_size; ++x) weights.emplace(x, each);
  return CompositionPrior(urn_size, std::move(weights));
}

const Rational& CompositionPrior::weight(int reds) const {
  const auto it = weights_.find(reds);
  if (it == weights_.end()) {
    throw std::domain_error("CompositionPrior: red count not in support");
  }
  return it->second;
}

Rational per_urn_second_red(int n, int x) {
  require_urn_size(n);
  if (x == 0) {
    throw std::domain_error("per_urn_second_red: no red ball to have been removed");
  }
  if (x < 0 || x > n) throw std::domain_error("per_urn_second_red: red count out of range");
  return Rational(x - 1, n - 1);
}

Rational uniform_prior_answer(int n) {
  require_urn_size(n);
  Rational total;
  for (int x = 1; x <= n; ++x) {
    total += Rational(1, n) * per_urn_second_red(n, x);
  }
  return total;
}

CompositionPrior weighted_prior(int n) {
  require_urn_size(n);
  std::map<int, Rational> weights;
  for (int x = 1; x <= n; ++x) {
    weights.emplace(x, Rational(2 * BigInt(x), BigInt(n) * (n + 1)));
  }
  return CompositionPrior(n, std::move(weights));
}

Rational weighted_prior_answer(int n) {
  const CompositionPrior prior = weighted_prior(n);
  Rational total;
  for (const auto& [x, w] : prior.weights()) {
    total += w * per_urn_second_red(n, x);
  }
  return total;
}

Rational weighted_prior_answer_closed_form(int n) {
  require_urn_size(n);
  // sum 2x/(n(n+1)) * (x-1)/(n-1) = 2 (sum x^2 - sum x) / ((n-1) n (n+1))
  const Rational numerator = square_pyramidal(n) - sum_integers(n);
  const Rational scale(2, BigInt(n - 1) * n * (n + 1));
  return scale * numerator;
}

ConditionalRatio conditional_ratio_answer(int n) {
  require_urn_size(n);
  Rational first_red;
  Rational both_red;
  const Rational urn_weight(1, n + 1);
  for (int x = 0; x <= n; ++x) {
    first_red += urn_weight * Rational(x, n);
    both_red += Rational(BigInt(x) * (x - 1), BigInt(n + 1) * n * (n - 1));
  }
  return ConditionalRatio{first_red, both_red, both_red / first_red};
}

Rational draw_sequence_probability(const UrnComposition& urn, const DrawSequence& draws) {
  if (static_cast<int>(draws.size()) > urn.total) {
    throw std::domain_error("draw sequence longer than the urn");
  }
  Rational probability(1);
  int reds = urn.reds;
  int greens = urn.greens();
  for (Color c : draws) {
    const int remaining = reds + greens;
    const int favourable = (c == Color::Red) ? reds : greens;
    if (favourable == 0) return Rational(0);
    probability *= Rational(favourable, remaining);
    (c == Color::Red ? reds : greens) -= 1;
  }
  return probability;
}

CompositionPrior posterior_given_prefix(const CompositionPrior& prior,
                                        const DrawSequence& prefix) {
  const int n = prior.urn_size();
  if (static_cast<int>(prefix.size()) > n) {
    throw std::domain_error("posterior_given_prefix: prefix longer than the urn");
  }

  std::map<int, Rational> unnormalized;
  Rational total;
  for (const auto& [x, w] : prior.weights()) {
    const Rational likelihood = draw_sequence_probability(UrnComposition(n, x), prefix);
    const Rational mass = w * likelihood;
    unnormalized.emplace(x, mass);
    total += mass;
  }
  if (total.is_zero()) {
    throw conditioning_error("conditioning on impossible draw sequence \"" +
                             draws_str(prefix) + "\"");
  }
  for (auto& [x, mass] : unnormalized) mass /= total;
  return CompositionPrior(n, std::move(unnormalized));
}

Rational next_red_given_prefix(int n, const DrawSequence& prefix) {
  require_urn_size(n);
  if (static_cast<int>(prefix.size()) >= n) {
    throw std::domain_error("next_red_given_prefix: no ball left to draw");
  }
  const CompositionPrior posterior =
      posterior_given_prefix(CompositionPrior::uniform(n), prefix);

  int reds_seen = 0;
  for (Color c : prefix) reds_seen += (c == Color::Red) ? 1 : 0;
  const int drawn = static_cast<int>(prefix.size());

  Rational probability;
  for (const auto& [x, w] : posterior.weights()) {
    probability += w * Rational(x - reds_seen, n - drawn);
  }
  return probability;
}

}  // namespace urnlab
