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

#include "sl2cf/lattice.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace sl2cf {

std::string_view to_string(MatrixClass c) {
  switch (c) {
    case MatrixClass::Hyperbolic:
      return "hyperbolic";
    case MatrixClass::Parabolic:
      return "parabolic";
    case MatrixClass::Elliptic:
      return "elliptic";
  }
  return "unknown";
}

MatrixClass classify(const UniMatrix& M) {
  const std::int64_t t2 = M.trace() * M.trace();
  if (t2 > 4) return MatrixClass::Hyperbolic;
  if (t2 == 4) return MatrixClass::Parabolic;
  return MatrixClass::Elliptic;
}

std::optional<std::pair<std::int64_t, std::int64_t>> solve_unimodular(std::int64_t k, std::int64_t m) {
  if (k == 0 && m == 0) throw std::invalid_argument("solve_unimodular: (k, m) = (0, 0)");
  if (k == 0) {
    // -l*m == 1 forces m = +-1 and l = -m; n is free.
    if (m != 1 && m != -1) return std::nullopt;
    return std::pair<std::int64_t, std::int64_t>{-m, 0};
  }
  BezoutResult b = extended_gcd(k, m);
  if (b.g != 1) return std::nullopt;
  // k*x + m*y == 1, so (l, n) = (-y, x); then move l into [0, |k|).
  Integer l = -b.y, n = b.x;
  Integer shift = floor_div(l, abs(Integer(k)));
  if (k < 0) shift = -shift;
  l -= shift * k;
  n -= shift * m;
  return std::pair<std::int64_t, std::int64_t>{l.to_int64(), n.to_int64()};
}

void for_each_in_ball(std::int64_t r, const std::function<void(const UniMatrix&)>& visit, std::int64_t k_begin,
                      std::int64_t k_end) {
  if (r <= 0) throw std::invalid_argument("ball radius must be positive, got " + std::to_string(r));
  const std::int64_t r2 = r * r;
  if (k_end < 0 || k_end > r + 1) k_end = r + 1;
  for (std::int64_t k = std::max<std::int64_t>(k_begin, 0); k < k_end; ++k) {
    const std::int64_t m_max = isqrt(r2 - k * k).to_int64();
    for (std::int64_t m = -m_max; m <= m_max; ++m) {
      if (k == 0 && m == 0) continue;
      auto seed = solve_unimodular(k, m);
      if (!seed) continue;
      const auto [l, n] = *seed;
      // norm(a) = S*a^2 + 2*T*a + U is convex in the shift a.
      const Integer S = k * k + m * m;
      const Integer T = Integer(l) * k + Integer(n) * m;
      const Integer U = Integer(l) * l + Integer(n) * n + S;
      const Integer disc = T * T - S * (U - r2);
      if (disc.is_negative()) continue;
      const std::int64_t a_lo = (-surd_floor({T, 1, disc, S})).to_int64();
      const std::int64_t a_hi = surd_floor({-T, 1, disc, S}).to_int64();
      for (std::int64_t a = a_lo; a <= a_hi; ++a) visit(UniMatrix{k, l + a * k, m, n + a * m});
    }
  }
}

std::vector<UniMatrix> enumerate_ball(std::int64_t r) {
  std::vector<UniMatrix> out;
  for_each_in_ball(r, [&](const UniMatrix& M) { out.push_back(M); });
  return out;
}

std::set<UniMatrix> brute_ball_oracle(std::int64_t r) {
  if (r < 0) throw std::invalid_argument("brute_ball_oracle: negative radius");
  if (r > 20) throw std::invalid_argument("brute_ball_oracle: radius " + std::to_string(r) + " exceeds 20");
  std::set<UniMatrix> out;
  const std::int64_t r2 = r * r;
  for (std::int64_t k = 0; k <= r; ++k)
    for (std::int64_t l = -r; l <= r; ++l)
      for (std::int64_t m = -r; m <= r; ++m)
        for (std::int64_t n = -r; n <= r; ++n) {
          UniMatrix M{k, l, m, n};
          if (M.det() == 1 && M.norm_sq() <= r2) out.insert(M);
        }
  return out;
}

std::optional<Surd> eigen_slope(const UniMatrix& M) {
  if (M.l == 0) return std::nullopt;
  const Integer disc = Integer(M.trace()) * M.trace() - 4;
  if (disc.is_negative()) return std::nullopt;
  return normalize({Integer(M.n) - M.k, 1, disc, Integer(2) * M.l});
}

}  // namespace sl2cf
