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
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string_view>
#include <utility>
#include <vector>

#include "sl2cf/surd.hpp"

namespace sl2cf {

/// Integer matrix [[k, l], [m, n]] with k*n - l*m == 1.
struct UniMatrix {
  std::int64_t k = 1;
  std::int64_t l = 0;
  std::int64_t m = 0;
  std::int64_t n = 1;

  std::int64_t norm_sq() const { return k * k + l * l + m * m + n * n; }
  std::int64_t trace() const { return k + n; }
  std::int64_t det() const { return k * n - l * m; }

  friend bool operator==(const UniMatrix&, const UniMatrix&) = default;
  friend auto operator<=>(const UniMatrix&, const UniMatrix&) = default;
};

enum class MatrixClass { Hyperbolic, Parabolic, Elliptic };

std::string_view to_string(MatrixClass c);

MatrixClass classify(const UniMatrix& M);

/// One (l, n) with k*n - l*m == 1, or nullopt when gcd(k, m) > 1.
/// The returned l lies in [0, k) for k > 0; for k == 0 the seed is (-m, 0).
/// Throws std::invalid_argument for (0, 0).
std::optional<std::pair<std::int64_t, std::int64_t>> solve_unimodular(std::int64_t k, std::int64_t m);

/**
 * Visits every unimodular matrix with k >= 0 and norm_sq <= r*r exactly once,
 * ordered by k, then m, then ascending shift a of the family
 * [[k, l + a*k], [m, n + a*m]] built on the solve_unimodular seed.
 *
 * k_begin/k_end restrict the first entry to [k_begin, k_end) so the ball can
 * be split across workers; concatenating consecutive ranges reproduces the
 * full order.
 */
void for_each_in_ball(std::int64_t r, const std::function<void(const UniMatrix&)>& visit,
                      std::int64_t k_begin = 0, std::int64_t k_end = -1);

std::vector<UniMatrix> enumerate_ball(std::int64_t r);

/// Exhaustive quartic scan for cross-checking enumerate_ball. Requires 0 <= r <= 20.
std::set<UniMatrix> brute_ball_oracle(std::int64_t r);

/// Slope y of the eigenvector (1, y) on the "+" branch, or nullopt when l == 0
/// or the eigenvalues are complex. The second slope is conjugate(*eigen_slope(M)).
std::optional<Surd> eigen_slope(const UniMatrix& M);

}  // namespace sl2cf
