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

#include "sl2cf/surd.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace sl2cf {

namespace {

// Radicands above this are rejected rather than partially reduced.
const Integer kMaxRadicand{std::int64_t{1} << 62};

// Sign fix and gcd cancellation for a surd whose radicand is already canonical.
Surd cancel(Integer u, Integer v, Integer w, Integer z) {
  if (z.is_negative()) {
    u = -u;
    v = -v;
    z = -z;
  }
  Integer g = gcd(gcd(u, v), z);
  if (g > 1) {
    u = u / g;
    v = v / g;
    z = z / g;
  }
  return {u, v, v.is_zero() ? Integer(0) : w, z};
}

// Sign of a + b*sqrt(w) for w >= 0.
int sign_of_sum(Integer a, Integer b, Integer w) {
  int sa = a.sign();
  int sb = w.is_zero() ? 0 : b.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  auto cmp = a * a <=> b * b * w;
  if (cmp > 0) return sa;
  if (cmp < 0) return sb;
  return 0;
}

}  // namespace

std::string to_string(const Surd& s) {
  std::ostringstream os;
  os << s;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Surd& s) {
  return os << "(" << s.u << (s.v.is_negative() ? " - " : " + ") << abs(s.v) << "*sqrt(" << s.w << "))/" << s.z;
}

Surd make_rational(Integer num, Integer den) {
  if (den.is_zero()) throw std::invalid_argument("surd with zero denominator");
  return cancel(num, 0, 0, den);
}

SquareSplit split_square(Integer w) {
  if (w.is_negative()) throw std::invalid_argument("negative radicand " + w.to_string());
  if (w > kMaxRadicand) throw OverflowError("radicand too large to reduce: " + w.to_string());
  if (w.is_zero()) return {0, 0};
  Integer root = 1, kernel = 1, n = w;
  for (Integer p = 2; p * p * p <= n; p += (p == 2 ? 1 : 2)) {
    int e = 0;
    while ((n % p).is_zero()) {
      n /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) root *= p;
    if (e % 2 == 1) kernel *= p;
  }
  // n now has at most two prime factors, all larger than any tried divisor.
  Integer r = isqrt(n);
  if (r * r == n) {
    root *= r;
  } else {
    kernel *= n;
  }
  return {root, kernel};
}

Surd normalize(const Surd& s) {
  if (s.z.is_zero()) throw std::invalid_argument("surd with zero denominator");
  if (s.w.is_negative()) throw std::invalid_argument("surd with negative radicand " + s.w.to_string());
  if (s.v.is_zero() || s.w.is_zero()) return cancel(s.u, 0, 0, s.z);
  SquareSplit split = split_square(s.w);
  if (split.kernel == 1) return cancel(s.u + s.v * split.square_root, 0, 0, s.z);
  return cancel(s.u, s.v * split.square_root, split.kernel, s.z);
}

Integer surd_floor(const Surd& s) {
  if (s.z.is_zero()) throw std::invalid_argument("surd with zero denominator");
  if (s.w.is_negative()) throw std::invalid_argument("surd with negative radicand " + s.w.to_string());
  Integer u = s.u, v = s.v, z = s.z;
  if (z.is_negative()) {
    u = -u;
    v = -v;
    z = -z;
  }
  if (v.is_zero() || s.w.is_zero()) return floor_div(u, z);
  // |v|*sqrt(w) lies in [r, r+1), exactly r only for perfect squares.
  Integer radical_sq = v * v * s.w;
  Integer r = isqrt(radical_sq);
  if (r * r == radical_sq) return floor_div(v.is_negative() ? u - r : u + r, z);
  // The numerator sits strictly between two consecutive integers N < num < N+1,
  // and no multiple of z can fall in that open gap.
  Integer lower = v.is_negative() ? u - r - 1 : u + r;
  return floor_div(lower, z);
}

Surd euclid_step(const Surd& s, Integer a) {
  Integer t = s.u - a * s.z;
  if (s.is_rational()) {
    if (t.is_zero()) throw RationalTermination("complete quotient equals " + a.to_string());
    return cancel(s.z, 0, 0, t);
  }
  // 1 / ((t + v*sqrt(w)) / z) = z*(t - v*sqrt(w)) / (t^2 - v^2*w)
  Integer denom = t * t - s.v * s.v * s.w;
  if (denom.is_zero()) throw RationalTermination("radicand of " + to_string(s) + " is a perfect square");
  return cancel(s.z * t, -(s.z * s.v), s.w, denom);
}

bool surd_eq(const Surd& a, const Surd& b) { return normalize(a) == normalize(b); }

Surd conjugate(const Surd& s) { return normalize({s.u, -s.v, s.w, s.z}); }

int compare(const Surd& s, const Rational& q) {
  Integer u = s.u, v = s.v, z = s.z;
  if (z.is_negative()) {
    u = -u;
    v = -v;
    z = -z;
  }
  return sign_of_sum(u * q.den() - q.num() * z, v * q.den(), s.w);
}

long double to_long_double(const Surd& s) {
  return (s.u.to_long_double() + s.v.to_long_double() * std::sqrt(s.w.to_long_double())) / s.z.to_long_double();
}

}  // namespace sl2cf
