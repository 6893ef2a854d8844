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

#include "sl2cf/rational.hpp"

#include <stdexcept>

namespace sl2cf {

Rational::Rational(Integer num, Integer den) {
  if (den.is_zero()) throw std::domain_error("rational with zero denominator");
  if (den.is_negative()) {
    num = -num;
    den = -den;
  }
  Integer g = gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational operator+(const Rational& a, const Rational& b) {
  Integer g = gcd(a.den_, b.den_);
  Integer bd = b.den_ / g;
  return Rational(a.num_ * bd + b.num_ * (a.den_ / g), a.den_ * bd);
}

Rational operator-(const Rational& a, const Rational& b) { return a + Rational(-b.num_, b.den_); }

Rational operator*(const Rational& a, const Rational& b) {
  Integer g1 = gcd(a.num_, b.den_);
  Integer g2 = gcd(b.num_, a.den_);
  if (g1.is_zero() || g2.is_zero()) return Rational{};
  return Rational((a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_.is_zero()) throw std::domain_error("rational division by zero");
  return a * Rational(b.den_, b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

std::string Rational::to_fixed(int places) const {
  Integer scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  Integer mag = abs(num_) * scale;
  Integer q = mag / den_;
  Integer rem = mag % den_;
  if (rem * 2 >= den_) q += 1;
  std::string digits = q.to_string();
  if (static_cast<int>(digits.size()) <= places) digits.insert(0, places + 1 - digits.size(), '0');
  std::string out = num_.is_negative() && !q.is_zero() ? "-" : "";
  out += digits.substr(0, digits.size() - places);
  if (places > 0) out += "." + digits.substr(digits.size() - places);
  return out;
}

double Rational::to_double() const {
  return static_cast<double>(num_.to_long_double() / den_.to_long_double());
}

}  // namespace sl2cf
