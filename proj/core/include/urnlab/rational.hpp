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

#ifndef URNLAB_RATIONAL_HPP_
#define URNLAB_RATIONAL_HPP_

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace urnlab {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number backed by arbitrary-precision integers.
///
/// Values are kept in canonical form at all times: the denominator is
/// strictly positive, gcd(|num|, den) == 1, and zero is represented as 0/1.
/// Because canonicalization is eager, equality is plain structural equality
/// of numerator and denominator, so "x == 2/3" is a decidable exact test.
///
/// All operations are pure; the type is freely shareable across threads.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}

  Rational(BigInt numerator, BigInt denominator)
      : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    normalize();
  }

  template <typename Int,
            typename = std::enable_if_t<std::is_integral_v<Int>>>
  Rational(Int value) : num_(value), den_(1) {}  // NOLINT: implicit by design

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  Rational& operator+=(const Rational& rhs) {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
    normalize();
    return *this;
  }

  Rational& operator-=(const Rational& rhs) {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ *= rhs.den_;
    normalize();
    return *this;
  }

  Rational& operator*=(const Rational& rhs) {
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    normalize();
    return *this;
  }

  Rational& operator/=(const Rational& rhs) {
    if (rhs.num_ == 0) throw std::domain_error("Rational: division by zero");
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    normalize();
    return *this;
  }

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend Rational operator-(const Rational& r) {
    Rational out;
    out.num_ = -r.num_;
    out.den_ = r.den_;
    return out;
  }

  /// Exact structural equality of canonical forms.
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    // Denominators are positive, so cross-multiplication preserves order.
    const BigInt lhs = a.num_ * b.den_;
    const BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Always "p/q", lowest terms, sign on the numerator ("5050/1", "-2/3").
  std::string fraction_str() const {
    return num_.str() + "/" + den_.str();
  }

  /// Human form: "p" for integers, "p/q" otherwise.
  std::string str() const {
    return den_ == 1 ? num_.str() : fraction_str();
  }

  /// Nearest double; for diagnostics and statistics only, never for equality.
  double to_double() const {
    return num_.convert_to<double>() / den_.convert_to<double>();
  }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    const BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_;
  BigInt den_;  // > 0
};

/// Fixed-point decimal rendering of `r` with exactly `significant_digits`
/// significant digits, correctly rounded (ties away from zero). Exact big
/// integer arithmetic throughout, so the digits never depend on double
/// rounding. Zero renders as "0." followed by `significant_digits` zeros.
std::string decimal_string(const Rational& r, int significant_digits = 12);

/// Parses "p/q" or a bare integer "p" (optional leading '-').
/// Throws std::invalid_argument on malformed input, std::domain_error on q=0.
Rational parse_fraction(std::string_view text);

}  // namespace urnlab

#endif  // URNLAB_RATIONAL_HPP_
