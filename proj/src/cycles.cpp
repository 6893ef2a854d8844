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

#include "sl2cf/cycles.hpp"

#include <algorithm>
#include <stdexcept>

namespace sl2cf {

namespace {

void require_nonempty(std::span<const Digit> c, const char* who) {
  if (c.empty()) throw std::invalid_argument(std::string(who) + ": empty cycle");
}

std::vector<std::size_t> failure_table(std::span<const Digit> pattern) {
  std::vector<std::size_t> fail(pattern.size() + 1, 0);
  for (std::size_t i = 1, k = 0; i < pattern.size(); ++i) {
    while (k > 0 && pattern[i] != pattern[k]) k = fail[k];
    if (pattern[i] == pattern[k]) ++k;
    fail[i + 1] = k;
  }
  return fail;
}

// Offsets j in [0, n) with rotate(text, j) == pattern, both of length n.
std::vector<std::size_t> rotation_offsets(std::span<const Digit> text, std::span<const Digit> pattern) {
  std::vector<std::size_t> hits;
  const std::size_t n = text.size();
  if (n != pattern.size() || n == 0) return hits;
  const auto fail = failure_table(pattern);
  for (std::size_t i = 0, k = 0; i + 1 < 2 * n; ++i) {
    const Digit d = text[i % n];
    while (k > 0 && d != pattern[k]) k = fail[k];
    if (d == pattern[k]) ++k;
    if (k == n) {
      hits.push_back(i + 1 - n);
      k = fail[k];
    }
  }
  return hits;
}

bool is_palindrome(std::span<const Digit> c) { return std::equal(c.begin(), c.begin() + c.size() / 2, c.rbegin()); }

Integer to_integer(const BigInt& x) {
  static const BigInt limit = BigInt(1) << 126;
  if (abs(x) >= limit) throw OverflowError("fixed-point form coefficient exceeds 128 bits");
  return parse_integer(x.str());
}

}  // namespace

Cycle rotate(std::span<const Digit> c, std::size_t j) {
  Cycle out(c.begin(), c.end());
  if (!out.empty()) std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(j % out.size()), out.end());
  return out;
}

Cycle reversed(std::span<const Digit> c) { return Cycle(c.rbegin(), c.rend()); }

Cycle canonical_rotation(std::span<const Digit> c) {
  require_nonempty(c, "canonical_rotation");
  const std::size_t n = c.size();
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const Digit a = c[(i + k) % n], b = c[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    (a > b ? i : j) += k + 1;
    if (i == j) ++j;
    k = 0;
  }
  return rotate(c, std::min(i, j));
}

Cycle primitive_root(std::span<const Digit> c) {
  const std::size_t n = c.size();
  if (n == 0) return {};
  const std::size_t p = n - failure_table(c)[n];
  return Cycle(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(n % p == 0 ? p : n));
}

bool is_rotation_of(std::span<const Digit> a, std::span<const Digit> b) {
  if (a.size() != b.size()) return false;
  return a.empty() || !rotation_offsets(a, b).empty();
}

bool is_cyclic_palindrome(std::span<const Digit> c) {
  require_nonempty(c, "is_cyclic_palindrome");
  return is_cyclic_reverse(c, c);
}

bool is_cyclic_reverse(std::span<const Digit> c1, std::span<const Digit> c2) {
  require_nonempty(c1, "is_cyclic_reverse");
  require_nonempty(c2, "is_cyclic_reverse");
  return is_rotation_of(c1, reversed(c2));
}

std::optional<std::size_t> shift_distance(std::span<const Digit> c1, std::span<const Digit> c2) {
  require_nonempty(c1, "shift_distance");
  require_nonempty(c2, "shift_distance");
  const auto hits = rotation_offsets(c1, reversed(c2));
  if (hits.empty()) return std::nullopt;
  const std::size_t n = c1.size();
  std::size_t best = n;
  for (std::size_t j : hits) best = std::min({best, j, n - j});
  return best;
}

bool is_near_straight_palindrome(std::span<const Digit> c) {
  if (c.size() <= 2) return true;
  return is_palindrome(c) || is_palindrome(c.subspan(1)) || is_palindrome(c.first(c.size() - 1));
}

Mat2<BigInt> cycle_matrix(std::span<const Digit> c) {
  require_nonempty(c, "cycle_matrix");
  Mat2<BigInt> out;
  for (Digit a : c) out = out * Mat2<BigInt>{BigInt(a), 1, 1, 0};
  return out;
}

QuadForm fixed_point_form(std::span<const Digit> c) {
  const Mat2<BigInt> M = cycle_matrix(c);
  // x = (P x + Q) / (R x + S)  <=>  R x^2 + (S - P) x - Q = 0
  BigInt A = M.r, B = M.s - M.p, C = -M.q;
  const BigInt g = gcd(gcd(A, B), C);
  A /= g;
  B /= g;
  C /= g;
  return with_positive_lead({to_integer(A), to_integer(B), to_integer(C), Branch::Plus});
}

bool verify_fixed_point(std::span<const Digit> c) {
  require_nonempty(c, "verify_fixed_point");
  if (std::any_of(c.begin(), c.end(), [](Digit d) { return d < 1; })) return false;
  const Expansion e = expand_qform(fixed_point_form(c));
  return e.head.empty() && e.cycle == primitive_root(c);
}

}  // namespace sl2cf
