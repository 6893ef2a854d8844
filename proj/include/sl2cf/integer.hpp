/**
Copyright 2026 The sl2cf Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

   http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
**/

#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace sl2cf {

/// Thrown whenever a checked arithmetic operation would leave the 128-bit range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/**
 * Signed 128-bit integer with overflow-checked arithmetic.
 *
 * Every operator traps instead of wrapping. Coefficients of cancelled surds
 * stay small in practice, so a fixed width is enough, but nothing here
 * assumes it.
 */
class Integer {
 public:
  using rep = __int128;

  constexpr Integer() = default;

  template <typename T>
    requires(std::integral<T> && !std::same_as<T, bool>)
  constexpr Integer(T value) : v_(static_cast<rep>(value)) {}  // NOLINT(google-explicit-constructor)

  static constexpr Integer from_raw(rep value) {
    Integer out;
    out.v_ = value;
    return out;
  }

  constexpr rep raw() const { return v_; }

  constexpr bool is_zero() const { return v_ == 0; }
  constexpr bool is_negative() const { return v_ < 0; }
  constexpr int sign() const { return (v_ > 0) - (v_ < 0); }

  /// Narrowing conversion; throws OverflowError when the value does not fit.
  std::int64_t to_int64() const;
  long double to_long_double() const { return static_cast<long double>(v_); }
  std::string to_string() const;

  friend Integer operator+(Integer a, Integer b) {
    rep r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw OverflowError("128-bit addition overflow");
    return from_raw(r);
  }
  friend Integer operator-(Integer a, Integer b) {
    rep r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw OverflowError("128-bit subtraction overflow");
    return from_raw(r);
  }
  friend Integer operator*(Integer a, Integer b) {
    rep r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw OverflowError("128-bit multiplication overflow");
    return from_raw(r);
  }
  /// Truncating division, like the builtin operator.
  friend Integer operator/(Integer a, Integer b) {
    check_division(a, b);
    return from_raw(a.v_ / b.v_);
  }
  friend Integer operator%(Integer a, Integer b) {
    check_division(a, b);
    return from_raw(a.v_ % b.v_);
  }
  Integer operator-() const { return Integer{} - *this; }

  Integer& operator+=(Integer o) { return *this = *this + o; }
  Integer& operator-=(Integer o) { return *this = *this - o; }
  Integer& operator*=(Integer o) { return *this = *this * o; }
  Integer& operator/=(Integer o) { return *this = *this / o; }

  friend constexpr bool operator==(Integer a, Integer b) = default;
  friend constexpr std::strong_ordering operator<=>(Integer a, Integer b) { return a.v_ <=> b.v_; }

  friend std::ostream& operator<<(std::ostream& os, Integer x);

 private:
  static void check_division(Integer a, Integer b);

  rep v_ = 0;
};

Integer abs(Integer x);

/// Quotient rounded toward negative infinity.
Integer floor_div(Integer a, Integer b);
/// Quotient rounded toward positive infinity.
Integer ceil_div(Integer a, Integer b);
/// Remainder with the sign of the divisor; floor_div(a,b)*b + floor_mod(a,b) == a.
Integer floor_mod(Integer a, Integer b);

/// Non-negative gcd; gcd(0, 0) == 0.
Integer gcd(Integer a, Integer b);

/// Exact floor of the square root. Throws std::invalid_argument for n < 0.
Integer isqrt(Integer n);
bool is_perfect_square(Integer n);

struct BezoutResult {
  Integer g;
  Integer x;
  Integer y;
};

/// Returns g = gcd(a, b) >= 0 together with x, y such that a*x + b*y == g.
BezoutResult extended_gcd(Integer a, Integer b);

/// Parses an optionally signed decimal literal; throws std::invalid_argument.
Integer parse_integer(const std::string& text);

inline std::size_t hash_combine(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace sl2cf

template <>
struct std::hash<sl2cf::Integer> {
  std::size_t operator()(sl2cf::Integer x) const noexcept {
    auto bits = static_cast<unsigned __int128>(x.raw());
    std::hash<std::uint64_t> h;
    return sl2cf::hash_combine(h(static_cast<std::uint64_t>(bits)), h(static_cast<std::uint64_t>(bits >> 64)));
  }
};
