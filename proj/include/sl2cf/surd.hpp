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

#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "sl2cf/integer.hpp"
#include "sl2cf/rational.hpp"

namespace sl2cf {

/// Raised by euclid_step when the complete quotient equals the subtracted integer.
class RationalTermination : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/**
 * Quadratic irrational (u + v*sqrt(w)) / z.
 *
 * Normalized form:
 *   - z > 0 and gcd(u, v, z) == 1;
 *   - w is squarefree, or v == w == 0 for rationals.
 *
 * The default equality is component-wise, which coincides with equality of
 * values only for normalized operands.
 */
struct Surd {
  Integer u = 0;
  Integer v = 0;
  Integer w = 0;
  Integer z = 1;

  bool is_rational() const { return v.is_zero(); }

  friend bool operator==(const Surd&, const Surd&) = default;
};

std::ostream& operator<<(std::ostream& os, const Surd& s);
std::string to_string(const Surd& s);

/// Rational value as a surd with v == w == 0.
Surd make_rational(Integer num, Integer den);

struct SquareSplit {
  Integer square_root;  // s with w == s*s*kernel
  Integer kernel;       // squarefree part of w
};

/// Splits w >= 0 into its largest square factor and squarefree kernel.
SquareSplit split_square(Integer w);

/// Unique normalized representative of the same value.
/// Throws std::invalid_argument for z == 0 or w < 0.
Surd normalize(const Surd& s);

/// floor(value(s)) with exact integer arithmetic. Accepts any z != 0, w >= 0.
Integer surd_floor(const Surd& s);

/// normalize(1 / (s - a)). Throws RationalTermination when value(s) == a.
Surd euclid_step(const Surd& s, Integer a);

/// True iff both surds denote the same real number.
bool surd_eq(const Surd& a, const Surd& b);

/// (u - v*sqrt(w)) / z, normalized.
Surd conjugate(const Surd& s);

/// Exact sign of value(s) - q.
int compare(const Surd& s, const Rational& q);

/// Approximation for diagnostics and tests only.
long double to_long_double(const Surd& s);

}  // namespace sl2cf

template <>
struct std::hash<sl2cf::Surd> {
  std::size_t operator()(const sl2cf::Surd& s) const noexcept {
    std::hash<sl2cf::Integer> h;
    std::size_t seed = h(s.u);
    seed = sl2cf::hash_combine(seed, h(s.v));
    seed = sl2cf::hash_combine(seed, h(s.w));
    return sl2cf::hash_combine(seed, h(s.z));
  }
};
