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

#include "sl2cf/expansion.hpp"

#include <string>
#include <unordered_map>

namespace sl2cf {

namespace {

struct QuadFormHash {
  std::size_t operator()(const QuadForm& f) const noexcept {
    std::hash<Integer> h;
    std::size_t seed = hash_combine(h(f.A), h(f.B));
    seed = hash_combine(seed, h(f.C));
    return hash_combine(seed, f.branch == Branch::Plus ? 1 : 2);
  }
};

struct SurdKey {
  Integer u, v, z;
  friend bool operator==(const SurdKey&, const SurdKey&) = default;
};

struct SurdKeyHash {
  std::size_t operator()(const SurdKey& k) const noexcept {
    std::hash<Integer> h;
    return hash_combine(hash_combine(h(k.u), h(k.v)), h(k.z));
  }
};

Expansion split_at(std::vector<Digit> digits, std::size_t period_start) {
  Expansion e;
  e.head.assign(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(period_start));
  e.cycle.assign(digits.begin() + static_cast<std::ptrdiff_t>(period_start), digits.end());
  e.preperiod_len = period_start;
  return e;
}

Expansion rational_expansion(std::vector<Digit> digits) {
  Expansion e;
  e.preperiod_len = digits.size();
  e.head = std::move(digits);
  return e;
}

[[noreturn]] void step_limit(std::size_t max_steps, const std::string& what) {
  throw StepLimitError("no period within " + std::to_string(max_steps) + " steps for " + what);
}

void require_irrational(Integer D, const char* who) {
  if (!D.is_negative() && !D.is_zero() && !is_perfect_square(D)) return;
  throw std::invalid_argument(std::string(who) + ": discriminant " + D.to_string() +
                              " is not a positive non-square");
}

}  // namespace

Branch flip(Branch b) { return b == Branch::Plus ? Branch::Minus : Branch::Plus; }

Expansion expand_surd(const Surd& x0, std::size_t max_steps) {
  Surd x = normalize(x0);
  std::unordered_map<Surd, std::size_t> seen;
  std::vector<Digit> digits;
  for (std::size_t step = 0; step <= max_steps; ++step) {
    auto [it, fresh] = seen.emplace(x, digits.size());
    if (!fresh) return split_at(std::move(digits), it->second);
    const Integer a = surd_floor(x);
    digits.push_back(a.to_int64());
    if (x.is_rational() && x.z == 1) return rational_expansion(std::move(digits));
    x = euclid_step(x, a);
  }
  step_limit(max_steps, to_string(x0));
}

QuadForm qform_step(const QuadForm& f, Integer a) {
  QuadForm next{f.A * a * a + f.B * a + f.C, f.B + Integer(2) * f.A * a, f.A, flip(f.branch)};
  if (next.A.is_zero()) throw RationalTermination("leading coefficient vanished at a = " + a.to_string());
  return next;
}

Surd qform_root(const QuadForm& f) {
  const Integer D = f.discriminant();
  if (D.sign() <= 0) throw std::invalid_argument("qform_root: discriminant " + D.to_string() + " is not positive");
  if (f.A.is_zero()) throw std::invalid_argument("qform_root: leading coefficient is zero");
  return normalize({-f.B, f.branch == Branch::Plus ? 1 : -1, D, Integer(2) * f.A});
}

QuadForm surd_to_qform(const Surd& s) {
  const Surd x = normalize(s);
  if (x.is_rational()) throw std::invalid_argument("surd_to_qform: " + to_string(s) + " is rational");
  // z x - u = v sqrt(w)  =>  z^2 x^2 - 2 u z x + (u^2 - v^2 w) = 0, root sign follows v
  Integer A = x.z * x.z, B = Integer(-2) * x.u * x.z, C = x.u * x.u - x.v * x.v * x.w;
  const Integer g = gcd(gcd(A, B), C);
  return {A / g, B / g, C / g, x.v.is_negative() ? Branch::Minus : Branch::Plus};
}

Integer qform_floor(const QuadForm& f) {
  return surd_floor({-f.B, f.branch == Branch::Plus ? 1 : -1, f.discriminant(), Integer(2) * f.A});
}

QuadForm with_positive_lead(const QuadForm& f) {
  if (!f.A.is_negative()) return f;
  // Negating every coefficient swaps which sign of sqrt(D) names the same root.
  return {-f.A, -f.B, -f.C, flip(f.branch)};
}

Expansion expand_qform(const QuadForm& f0, std::size_t max_steps, std::vector<QuadForm>* trace) {
  if (f0.A.is_zero()) throw std::invalid_argument("expand_qform: leading coefficient is zero");
  const Integer D = f0.discriminant();
  require_irrational(D, "expand_qform");
  QuadForm f = with_positive_lead(f0);
  std::unordered_map<QuadForm, std::size_t, QuadFormHash> seen;
  std::vector<Digit> digits;
  for (std::size_t step = 0; step <= max_steps; ++step) {
    if (trace) trace->push_back(f);
    auto [it, fresh] = seen.emplace(f, digits.size());
    if (!fresh) return split_at(std::move(digits), it->second);
    const Integer a = qform_floor(f);
    digits.push_back(a.to_int64());
    f = with_positive_lead(qform_step(f, a));
  }
  step_limit(max_steps, "form (" + f0.A.to_string() + ", " + f0.B.to_string() + ", " + f0.C.to_string() + ")");
}

bool check_divisibility(Integer p, Integer q, std::size_t max_steps) {
  const Integer w = p * p - Integer(4) * q;
  require_irrational(w, "check_divisibility");
  Integer u = -p, v = 1, z = 2;
  std::unordered_map<SurdKey, std::size_t, SurdKeyHash> seen;
  for (std::size_t step = 0; step <= max_steps; ++step) {
    if (!seen.emplace(SurdKey{u, v, z}, step).second) return true;
    const Integer a = surd_floor({u, v, w, z});
    const Integer t = u - a * z;
    Integer nu = z * t;
    Integer nv = -(z * v);
    Integer nz = t * t - v * v * w;
    if (nz.is_negative()) {
      nu = -nu;
      nv = -nv;
      nz = -nz;
    }
    if (!(nu % nv).is_zero() || !(nz % nv).is_zero()) return false;
    const Integer scale = abs(nv);
    u = nu / scale;
    v = nv / scale;
    z = nz / scale;
  }
  step_limit(max_steps, "x^2 + " + p.to_string() + "x + " + q.to_string());
}

Integer khinchin_bound(const QuadForm& f0) {
  const Integer D = f0.discriminant();
  if (D.sign() <= 0) throw std::invalid_argument("khinchin_bound: discriminant " + D.to_string() + " is not positive");
  // 2|A x| = |-B +- sqrt(D)| <= |B| + isqrt(D) + 1
  const Integer twice_ax = abs(f0.B) + isqrt(D) + 1;
  return twice_ax + abs(f0.A) + abs(f0.B);
}

std::vector<Digit> raw_euclid_digits(const Surd& x0, std::size_t max_digits) {
  std::vector<Digit> digits;
  Integer u = x0.u, v = x0.v, z = x0.z;
  const Integer w = x0.w;
  try {
    while (digits.size() < max_digits) {
      const Integer a = surd_floor({u, v, w, z});
      digits.push_back(a.to_int64());
      const Integer t = u - a * z;
      if (v.is_zero() || w.is_zero()) {
        if (t.is_zero()) break;
        u = z;
        z = t;
        continue;
      }
      Integer nz = t * t - v * v * w;
      if (nz.is_zero()) break;
      u = z * t;
      v = -(z * v);
      z = nz;
    }
  } catch (const OverflowError&) {
  }
  return digits;
}

Rational evaluate_finite(std::span<const Digit> digits) {
  if (digits.empty()) throw std::invalid_argument("evaluate_finite: empty digit sequence");
  Integer p_prev = 1, p = digits[0];
  Integer q_prev = 0, q = 1;
  for (std::size_t i = 1; i < digits.size(); ++i) {
    Integer np = Integer(digits[i]) * p + p_prev;
    Integer nq = Integer(digits[i]) * q + q_prev;
    p_prev = p;
    p = np;
    q_prev = q;
    q = nq;
  }
  return Rational(p, q);
}

std::vector<Digit> unroll(const Expansion& e, std::size_t repeats) {
  std::vector<Digit> out = e.head;
  for (std::size_t i = 0; i < repeats; ++i) out.insert(out.end(), e.cycle.begin(), e.cycle.end());
  return out;
}

}  // namespace sl2cf
