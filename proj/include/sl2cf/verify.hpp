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
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sl2cf/cycles.hpp"
#include "sl2cf/expansion.hpp"

namespace sl2cf {

enum class VerifyKind { Palindrome, Reversal, Equivalence, Conjecture, FixedPoint };

std::string_view to_string(VerifyKind k);
/// Throws std::invalid_argument on an unknown name.
VerifyKind parse_verify_kind(std::string_view text);

/// Inputs shared by all property runs.
struct GridOptions {
  /// Monic grid x^2 + p x + q with |p| <= pmax, |q| <= qmax.
  std::int64_t pmax = 100;
  std::int64_t qmax = 100;
  /// Hyperbolic matrices with norm <= radius.
  std::int64_t radius = 30;
  /// Random forms with coefficients in [-coef, coef].
  std::size_t samples = 1000;
  std::int64_t coef = 50;
  std::uint64_t seed = 1;
  std::size_t max_steps = kDefaultMaxSteps;
};

struct Counterexample {
  std::string kind;
  nlohmann::json input;
  nlohmann::json expected;
  nlohmann::json got;
};

nlohmann::json to_json(const Counterexample& c);

struct VerifyReport {
  VerifyKind kind = VerifyKind::Palindrome;
  std::size_t checked = 0;
  /// Inputs abandoned because a checked 128-bit operation overflowed.
  std::size_t overflow_aborts = 0;
  std::vector<Counterexample> counterexamples;
  /// Canonical rotations of every period met along the way.
  std::set<Cycle> cycles;

  /// Palindrome runs only: shift_distance between the two roots' periods,
  /// and how many periods are near-straight palindromes.
  std::map<std::size_t, std::size_t> shift_histogram;
  std::size_t near_straight = 0;
  std::size_t periods_seen = 0;

  bool ok() const { return counterexamples.empty(); }
};

/// Irreducible forms A x^2 + B x + C with A != 0 and positive non-square
/// discriminant, both branches equally likely. Deterministic in seed.
std::vector<QuadForm> random_forms(std::size_t count, std::int64_t bound, std::uint64_t seed);

/// Monic forms (1, p, q) on the grid with irrational roots, Plus branch.
std::vector<QuadForm> monic_grid(std::int64_t pmax, std::int64_t qmax);

nlohmann::json to_json(const QuadForm& f);

/**
 * palindrome:  both roots of every monic grid form have palindromic periods.
 * reversal:    the two slopes of every hyperbolic ball matrix, and the two
 *              roots of every random form, have mutually reversed periods.
 * equivalence: expand_surd and expand_qform agree on the reversal inputs,
 *              and every expand_qform trace keeps its discriminant and
 *              stays within khinchin_bound (kind "khinchin").
 * conjecture:  check_divisibility on the monic grid.
 * fixedpoint:  verify_fixed_point on every period produced by the others.
 */
VerifyReport run_verify(VerifyKind kind, const GridOptions& options);

}  // namespace sl2cf
