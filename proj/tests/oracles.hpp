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
//
// Independent reference implementations used only by tests. Each one takes
// the most literal route available (labeled balls, exhaustive enumeration,
// plain loops) so that agreement with the library is meaningful.

#ifndef URNLAB_TESTS_ORACLES_HPP_
#define URNLAB_TESTS_ORACLES_HPP_

#include <array>
#include <cstdint>
#include <vector>

#include "urnlab/rational.hpp"
#include "urnlab/urn_models.hpp"

namespace urnlab::oracles {

/// Counts ordered tuples of distinct labeled balls (1..n, the first `reds`
/// red) whose colors match `colors`, by walking every tuple.
inline BigInt count_matching_tuples_rec(int n, int reds,
                                        const DrawSequence& colors,
                                        std::size_t pos, std::uint32_t used) {
  if (pos == colors.size()) return 1;
  BigInt total = 0;
  for (int ball = 1; ball <= n; ++ball) {
    if (used & (1u << ball)) continue;
    Color color = ball <= reds ? Color::Red : Color::Green;
    if (color != colors[pos]) continue;
    total += count_matching_tuples_rec(n, reds, colors, pos + 1,
                                       used | (1u << ball));
  }
  return total;
}

inline BigInt count_matching_tuples(int n, int reds,
                                    const DrawSequence& colors) {
  return count_matching_tuples_rec(n, reds, colors, 0, 0);
}

/// Pr[next ball red | observed prefix] with the red count uniform on {0..n},
/// from raw tuple counts. The per-composition tuple spaces share a size, so
/// the uniform prior cancels into plain sums of counts.
inline Rational oracle_next_red(int n, const DrawSequence& prefix) {
  DrawSequence extended = prefix;
  extended.push_back(Color::Red);
  BigInt with_red = 0;
  BigInt prefix_count = 0;
  for (int reds = 0; reds <= n; ++reds) {
    with_red += count_matching_tuples(n, reds, extended);
    prefix_count += count_matching_tuples(n, reds, prefix);
  }
  auto remaining = static_cast<std::int64_t>(n - prefix.size());
  return Rational(with_red, prefix_count * remaining);
}

/// Posterior Pr[reds = x | observed prefix] from the same tuple counts.
inline Rational oracle_posterior_weight(int n, const DrawSequence& prefix,
                                        int x) {
  BigInt total = 0;
  for (int reds = 0; reds <= n; ++reds) {
    total += count_matching_tuples(n, reds, prefix);
  }
  return Rational(count_matching_tuples(n, x, prefix), total);
}

/// Step-3 success probability by walking every (boundary, pick, second pick).
inline Rational oracle_symmetry_answer(int n) {
  BigInt successes = 0;
  BigInt total = 0;
  for (int i = 0; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) {
        if (k == j) continue;
        ++total;
        if (k > i) ++successes;
      }
    }
  }
  return Rational(successes, total);
}

/// Mean interval lengths by direct averaging over all (boundary, pick) pairs.
inline std::array<Rational, 3> oracle_mean_intervals(int n) {
  BigInt left = 0;
  BigInt mid = 0;
  BigInt right = 0;
  BigInt pairs = 0;
  for (int i = 0; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      left += i;
      mid += j - i - 1;
      right += n - j;
      ++pairs;
    }
  }
  return {Rational(left, pairs), Rational(mid, pairs), Rational(right, pairs)};
}

/// Pascal's triangle rows 0..rows-1 by the addition recurrence.
inline std::vector<std::vector<BigInt>> pascal_table(int rows) {
  std::vector<std::vector<BigInt>> table(static_cast<std::size_t>(rows));
  for (int r = 0; r < rows; ++r) {
    auto& row = table[static_cast<std::size_t>(r)];
    row.assign(static_cast<std::size_t>(r) + 1, BigInt(1));
    for (int c = 1; c < r; ++c) {
      row[static_cast<std::size_t>(c)] =
          table[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] +
          table[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)];
    }
  }
  return table;
}

inline BigInt loop_sum(std::int64_t n) {
  BigInt total = 0;
  for (std::int64_t x = 1; x <= n; ++x) total += x;
  return total;
}

inline BigInt loop_sum_squares(std::int64_t n) {
  BigInt total = 0;
  for (std::int64_t x = 1; x <= n; ++x) total += BigInt(x) * x;
  return total;
}

/// Two-ball sample census for the whole family at size n, by listing every
/// labeled pair in every urn. Index = number of reds in the pair.
inline std::array<BigInt, 3> oracle_family_pair_census(int n) {
  std::array<BigInt, 3> counts{BigInt(0), BigInt(0), BigInt(0)};
  for (int x = 0; x <= n; ++x) {
    for (int a = 1; a <= n; ++a) {
      for (int b = a + 1; b <= n; ++b) {
        int reds_in_pair = (a <= x ? 1 : 0) + (b <= x ? 1 : 0);
        ++counts[static_cast<std::size_t>(reds_in_pair)];
      }
    }
  }
  return counts;
}

/// All draw sequences of exactly the given length, in lexicographic order
/// with red sorting before green at each position.
inline std::vector<DrawSequence> all_prefixes_of_length(int length) {
  std::vector<DrawSequence> result;
  std::uint32_t combos = 1u << length;
  for (std::uint32_t bits = 0; bits < combos; ++bits) {
    DrawSequence seq;
    for (int pos = 0; pos < length; ++pos) {
      seq.push_back((bits >> pos) & 1u ? Color::Green : Color::Red);
    }
    result.push_back(std::move(seq));
  }
  return result;
}

}  // namespace urnlab::oracles

#endif  // URNLAB_TESTS_ORACLES_HPP_
