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

#include "urnlab/rational.hpp"

#include <cctype>
#include <cstddef>

namespace urnlab {
namespace {

BigInt pow10(int e) {
  BigInt out = 1;
  for (int i = 0; i < e; ++i) out *= 10;
  return out;
}

int decimal_digit_count(const BigInt& positive) {
  return static_cast<int>(positive.str().size());
}

// round(a / b) with ties away from zero; a, b > 0.
BigInt divide_rounded(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  const BigInt rem = a - q * b;
  if (2 * rem >= b) ++q;
  return q;
}

}  // namespace

std::string decimal_string(const Rational& r, int significant_digits) {
  if (significant_digits < 1) {
    throw std::domain_error("decimal_string: need at least one digit");
  }
  const int sig = significant_digits;
  if (r.is_zero()) {
    return "0." + std::string(static_cast<std::size_t>(sig), '0');
  }

  const bool negative = r.numerator() < 0;
  const BigInt a = negative ? BigInt(-r.numerator()) : r.numerator();
  const BigInt& b = r.denominator();

  // e = floor(log10(a/b)): start from the digit-count estimate, then fix up
  // by exact comparison. a/b >= 10^e  <=>  a >= b * 10^e (e >= 0),
  // and a/b >= 10^e  <=>  a * 10^-e >= b (e < 0).
  int e = decimal_digit_count(a) - decimal_digit_count(b);
  auto at_least_pow = [&](int p) {
    return p >= 0 ? a >= b * pow10(p) : a * pow10(-p) >= b;
  };
  while (!at_least_pow(e)) --e;
  while (at_least_pow(e + 1)) ++e;

  // Want m = round(a/b * 10^(sig-1-e)), which has exactly `sig` digits
  // unless rounding carries into the next decade.
  const int shift = sig - 1 - e;
  BigInt m = shift >= 0 ? divide_rounded(a * pow10(shift), b)
                        : divide_rounded(a, b * pow10(-shift));
  if (m == pow10(sig)) {  // 0.99...9 rounded up a decade
    m = pow10(sig - 1);
    ++e;
  }

  std::string digits = m.str();
  std::string out = negative ? "-" : "";
  if (e < 0) {
    out += "0.";
    out.append(static_cast<std::size_t>(-e - 1), '0');
    out += digits;
  } else if (e + 1 >= sig) {
    out += digits;
    out.append(static_cast<std::size_t>(e + 1 - sig), '0');
  } else {
    out += digits.substr(0, static_cast<std::size_t>(e + 1));
    out += '.';
    out += digits.substr(static_cast<std::size_t>(e + 1));
  }
  return out;
}

Rational parse_fraction(std::string_view text) {
  const auto parse_int = [](std::string_view s) -> BigInt {
    if (s.empty()) throw std::invalid_argument("parse_fraction: empty integer");
    std::size_t i = 0;
    if (s[0] == '-') i = 1;
    if (i == s.size()) throw std::invalid_argument("parse_fraction: lone sign");
    for (std::size_t k = i; k < s.size(); ++k) {
      if (!std::isdigit(static_cast<unsigned char>(s[k]))) {
        throw std::invalid_argument("parse_fraction: non-digit character");
      }
    }
    return BigInt(std::string(s));
  };

  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_int(text), 1);
  }
  const BigInt num = parse_int(text.substr(0, slash));
  const BigInt den = parse_int(text.substr(slash + 1));
  return Rational(num, den);
}

}  // namespace urnlab
