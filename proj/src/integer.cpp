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

#include "sl2cf/integer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

namespace sl2cf {

namespace {

using u128 = unsigned __int128;

constexpr Integer::rep kMin = static_cast<Integer::rep>(static_cast<u128>(1) << 127);

}  // namespace

void Integer::check_division(Integer a, Integer b) {
  if (b.v_ == 0) throw std::domain_error("integer division by zero");
  if (a.v_ == kMin && b.v_ == -1) throw OverflowError("128-bit division overflow");
}

std::int64_t Integer::to_int64() const {
  if (v_ < std::numeric_limits<std::int64_t>::min() || v_ > std::numeric_limits<std::int64_t>::max())
    throw OverflowError("value does not fit in 64 bits: " + to_string());
  return static_cast<std::int64_t>(v_);
}

std::string Integer::to_string() const {
  if (v_ == 0) return "0";
  u128 mag = v_ < 0 ? static_cast<u128>(-(v_ + 1)) + 1 : static_cast<u128>(v_);
  std::string digits;
  while (mag != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
    mag /= 10;
  }
  if (v_ < 0) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::ostream& operator<<(std::ostream& os, Integer x) { return os << x.to_string(); }

Integer abs(Integer x) { return x.is_negative() ? -x : x; }

Integer floor_div(Integer a, Integer b) {
  Integer q = a / b;
  Integer r = a % b;
  if (!r.is_zero() && (r.is_negative() != b.is_negative())) q -= 1;
  return q;
}

Integer ceil_div(Integer a, Integer b) {
  Integer q = a / b;
  Integer r = a % b;
  if (!r.is_zero() && (r.is_negative() == b.is_negative())) q += 1;
  return q;
}

Integer floor_mod(Integer a, Integer b) { return a - floor_div(a, b) * b; }

Integer gcd(Integer a, Integer b) {
  a = abs(a);
  b = abs(b);
  while (!b.is_zero()) {
    Integer t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Integer isqrt(Integer n) {
  if (n.is_negative()) throw std::invalid_argument("isqrt of negative integer " + n.to_string());
  const u128 value = static_cast<u128>(n.raw());
  u128 root = static_cast<u128>(std::sqrt(static_cast<long double>(value)));
  // root < 2^64 so root*root and (root+1)^2 cannot wrap in 128 unsigned bits.
  while (root * root > value) --root;
  while ((root + 1) * (root + 1) <= value) ++root;
  return Integer::from_raw(static_cast<Integer::rep>(root));
}

bool is_perfect_square(Integer n) {
  if (n.is_negative()) return false;
  Integer s = isqrt(n);
  return s * s == n;
}

BezoutResult extended_gcd(Integer a, Integer b) {
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (!r.is_zero()) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r.is_negative()) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

Integer parse_integer(const std::string& text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) throw std::invalid_argument("not an integer: '" + text + "'");
  Integer value = 0;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c < '0' || c > '9') throw std::invalid_argument("not an integer: '" + text + "'");
    value = value * 10 + (negative ? -(c - '0') : (c - '0'));
  }
  return value;
}

}  // namespace sl2cf
