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
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "sl2cf/rational.hpp"
#include "sl2cf/surd.hpp"

namespace sl2cf {

using Digit = std::int64_t;

inline constexpr std::size_t kDefaultMaxSteps = 10000;

/// The expansion did not close a period within the step budget.
class StepLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * Continued fraction [head; cycle, cycle, ...].
 *
 * head holds a_0 .. a_{i-1}, the digits before the first repeated complete
 * quotient, and cycle holds the period exactly as first met (not rotated).
 * For rational input the whole finite expansion lives in head and cycle is
 * empty.
 */
struct Expansion {
  std::vector<Digit> head;
  std::vector<Digit> cycle;
  std::size_t preperiod_len = 0;

  bool is_rational() const { return cycle.empty(); }

  friend bool operator==(const Expansion&, const Expansion&) = default;
};

enum class Branch { Plus, Minus };

/// A*x^2 + B*x + C with a selected root (-B +- sqrt(D)) / (2A).
struct QuadForm {
  Integer A = 1;
  Integer B = 0;
  Integer C = 0;
  Branch branch = Branch::Plus;

  Integer discriminant() const { return B * B - Integer(4) * A * C; }

  friend bool operator==(const QuadForm&, const QuadForm&) = default;
};

Branch flip(Branch b);

/// Surd-Euclidean expansion with gcd cancellation at every step.
/// Throws StepLimitError, OverflowError.
Expansion expand_surd(const Surd& x0, std::size_t max_steps = kDefaultMaxSteps);

/**
 * Form whose roots are 1/(x - a) for the roots x of f:
 * (A a^2 + B a + C, B + 2 A a, A). The branch is updated so that it keeps
 * selecting the image of the root f selected. Throws RationalTermination
 * when the leading coefficient vanishes.
 */
QuadForm qform_step(const QuadForm& f, Integer a);

/// Selected root as a normalized surd. Throws std::invalid_argument when D <= 0.
Surd qform_root(const QuadForm& f);

/// Primitive form with A > 0 whose selected root is s. Throws std::invalid_argument for rational s.
QuadForm surd_to_qform(const Surd& s);

/// Exact floor of the selected root.
Integer qform_floor(const QuadForm& f);

/// Same form and root with A > 0.
QuadForm with_positive_lead(const QuadForm& f);

/**
 * Expansion driven by the coefficient recurrence alone. The period closes
 * when a (A, B, C, branch) state repeats. When trace is non-null it receives
 * every visited state, including the first repeated one.
 */
Expansion expand_qform(const QuadForm& f, std::size_t max_steps = kDefaultMaxSteps,
                       std::vector<QuadForm>* trace = nullptr);

/**
 * Runs the Euclidean step on the plus root of x^2 + p x + q without gcd
 * cancellation and checks after every step that the radical coefficient
 * divides both the rational part and the denominator. Only that coefficient
 * is cancelled before the next step. Returns false at the first failure,
 * true once a full period has been traversed.
 */
bool check_divisibility(Integer p, Integer q, std::size_t max_steps = kDefaultMaxSteps);

/// Upper bound on |A_i| and |C_i| along expand_qform of f0.
Integer khinchin_bound(const QuadForm& f0);

/// Digits of the fully uncancelled recurrence; stops early, without error,
/// once the coefficients leave the 128-bit range or max_digits is reached.
std::vector<Digit> raw_euclid_digits(const Surd& x0, std::size_t max_digits);

/// Value of the finite continued fraction [a_0; a_1, ..., a_n].
Rational evaluate_finite(std::span<const Digit> digits);

/// head followed by `repeats` copies of cycle.
std::vector<Digit> unroll(const Expansion& e, std::size_t repeats);

}  // namespace sl2cf
