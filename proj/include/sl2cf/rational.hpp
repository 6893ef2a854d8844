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
#include <string>

#include "sl2cf/integer.hpp"

namespace sl2cf {

/// Reduced fraction with positive denominator over checked 128-bit integers.
class Rational {
 public:
  Rational() = default;
  Rational(Integer num) : num_(num) {}  // NOLINT(google-explicit-constructor)
  Rational(Integer num, Integer den);

  Integer num() const { return num_; }
  Integer den() const { return den_; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// Decimal rendering rounded half away from zero, e.g. to_fixed(2) of 1/3 is "0.33".
  std::string to_fixed(int places) const;
  double to_double() const;

 private:
  Integer num_ = 0;
  Integer den_ = 1;
};

}  // namespace sl2cf
