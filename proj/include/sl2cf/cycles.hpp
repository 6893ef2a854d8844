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

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sl2cf/expansion.hpp"

namespace sl2cf {

/// Period of a continued fraction read as a cyclic word; every digit >= 1.
using Cycle = std::vector<Digit>;

/// Period matrices outgrow 128 bits long before the expansions do.
using BigInt = boost::multiprecision::cpp_int;

/// Dense 2x2 matrix [[p, q], [r, s]] over any ring scalar.
template <typename T>
struct Mat2 {
  T p{1}, q{0}, r{0}, s{1};

  T det() const { return p * s - q * r; }
  T trace() const { return p + s; }

  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {a.p * b.p + a.q * b.r, a.p * b.q + a.q * b.s, a.r * b.p + a.s * b.r, a.r * b.q + a.s * b.s};
  }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

/// Left rotation: rotate(c, j)[i] == c[(i + j) % size].
Cycle rotate(std::span<const Digit> c, std::size_t j);
Cycle reversed(std::span<const Digit> c);

/// Lexicographically least rotation. Throws std::invalid_argument on empty input.
Cycle canonical_rotation(std::span<const Digit> c);

/// Shortest word whose repetition gives c.
Cycle primitive_root(std::span<const Digit> c);

bool is_rotation_of(std::span<const Digit> a, std::span<const Digit> b);

/// Some rotation of c equals reversed(c).
bool is_cyclic_palindrome(std::span<const Digit> c);

/// Some rotation of c1 equals reversed(c2). Symmetric in its arguments.
bool is_cyclic_reverse(std::span<const Digit> c1, std::span<const Digit> c2);

/// min(j, len - j) over the j with rotate(c1, j) == reversed(c2), if any.
std::optional<std::size_t> shift_distance(std::span<const Digit> c1, std::span<const Digit> c2);

/// Plain palindrome, or a palindrome once the first or the last digit is dropped.
bool is_near_straight_palindrome(std::span<const Digit> c);

/// Product of [[a, 1], [1, 0]] over the digits, left to right.
Mat2<BigInt> cycle_matrix(std::span<const Digit> c);

/**
 * Checks that the purely periodic number with period c is the expanding
 * fixed point of cycle_matrix(c): the fixed-point quadratic
 * R x^2 + (S - P) x - Q, reduced by its content, must expand with an empty
 * head and exactly the primitive period of c.
 */
bool verify_fixed_point(std::span<const Digit> c);

/// Primitive fixed-point form of cycle_matrix(c), leading coefficient positive, Plus branch.
QuadForm fixed_point_form(std::span<const Digit> c);

}  // namespace sl2cf
