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

#include "sl2cf/verify.hpp"

#include <functional>
#include <random>
#include <stdexcept>

#include "sl2cf/lattice.hpp"

namespace sl2cf {

namespace {

using nlohmann::json;

json json_int(const Integer& x) {
  try {
    return x.to_int64();
  } catch (const OverflowError&) {
    return x.to_string();
  }
}

json json_matrix(const UniMatrix& M) { return {{"matrix", {{M.k, M.l}, {M.m, M.n}}}}; }

json json_expansion(const Expansion& e) {
  return {{"head", e.head}, {"cycle", e.cycle}, {"preperiod_len", e.preperiod_len}};
}

QuadForm branch_of(QuadForm f, Branch b) {
  f.branch = b;
  return f;
}

/// Root pair of one input: either a matrix's two slopes or a form's two roots.
struct RootPair {
  json input;
  QuadForm plus;
};

std::vector<RootPair> reversal_inputs(const GridOptions& o) {
  std::vector<RootPair> out;
  for_each_in_ball(o.radius, [&](const UniMatrix& M) {
    if (classify(M) != MatrixClass::Hyperbolic) return;
    // the Plus root of l y^2 + (k - n) y - m is eigen_slope(M)
    out.push_back({json_matrix(M), QuadForm{M.l, M.k - M.n, -M.m, Branch::Plus}});
  });
  for (const auto& f : random_forms(o.samples, o.coef, o.seed))
    out.push_back({{{"form", to_json(branch_of(f, Branch::Plus))}}, branch_of(f, Branch::Plus)});
  return out;
}

class Runner {
 public:
  Runner(VerifyKind kind, const GridOptions& options) : options_(options) { report_.kind = kind; }

  /// Runs body once per input, counting overflow aborts instead of failing.
  void guarded(const std::function<void()>& body) {
    ++report_.checked;
    try {
      body();
    } catch (const OverflowError&) {
      ++report_.overflow_aborts;
    }
  }

  void fail(std::string kind, json input, json expected, json got) {
    report_.counterexamples.push_back({std::move(kind), std::move(input), std::move(expected), std::move(got)});
  }

  void harvest(const Cycle& c) {
    if (!c.empty()) report_.cycles.insert(canonical_rotation(c));
  }

  void palindrome() {
    for (const auto& f : monic_grid(options_.pmax, options_.qmax)) {
      guarded([&] {
        const Expansion e1 = expand_qform(f, options_.max_steps);
        const Expansion e2 = expand_qform(branch_of(f, Branch::Minus), options_.max_steps);
        for (const auto* e : {&e1, &e2}) {
          harvest(e->cycle);
          ++report_.periods_seen;
          if (is_near_straight_palindrome(e->cycle)) ++report_.near_straight;
          if (!is_cyclic_palindrome(e->cycle))
            fail("palindrome", {{"form", to_json(e == &e1 ? f : branch_of(f, Branch::Minus))}}, "cyclic palindrome",
                 json_expansion(*e));
        }
        if (auto d = shift_distance(e1.cycle, e2.cycle)) ++report_.shift_histogram[*d];
      });
    }
  }

  void reversal() {
    for (const auto& in : reversal_inputs(options_)) {
      guarded([&] {
        const Expansion e1 = expand_surd(qform_root(in.plus), options_.max_steps);
        const Expansion e2 = expand_surd(qform_root(branch_of(in.plus, Branch::Minus)), options_.max_steps);
        harvest(e1.cycle);
        harvest(e2.cycle);
        if (!is_cyclic_reverse(e1.cycle, e2.cycle))
          fail("reversal", in.input, "periods reversed up to rotation", {{"plus", e1.cycle}, {"minus", e2.cycle}});
      });
    }
  }

  void equivalence() {
    for (const auto& in : reversal_inputs(options_)) {
      for (Branch b : {Branch::Plus, Branch::Minus}) {
        const QuadForm f = branch_of(in.plus, b);
        json input = in.input;
        input["branch"] = b == Branch::Plus ? "plus" : "minus";
        guarded([&] { compare_algorithms(f, input); });
      }
    }
  }

  void conjecture() {
    for (const auto& f : monic_grid(options_.pmax, options_.qmax)) {
      guarded([&] {
        if (!check_divisibility(f.B, f.C, options_.max_steps))
          fail("conjecture", {{"p", json_int(f.B)}, {"q", json_int(f.C)}}, true, false);
      });
    }
  }

  void fixed_point() {
    std::set<Cycle> cycles;
    for (VerifyKind k : {VerifyKind::Palindrome, VerifyKind::Reversal}) {
      auto sub = run_verify(k, options_);
      report_.overflow_aborts += sub.overflow_aborts;
      cycles.merge(sub.cycles);
    }
    for (const auto& c : cycles) {
      ++report_.checked;
      if (!verify_fixed_point(c)) fail("fixedpoint", {{"cycle", c}}, true, false);
    }
    report_.cycles = std::move(cycles);
  }

  VerifyReport take() { return std::move(report_); }

 private:
  void compare_algorithms(const QuadForm& f, const json& input) {
    std::vector<QuadForm> trace;
    const Expansion by_form = expand_qform(f, options_.max_steps, &trace);
    const Expansion by_surd = expand_surd(qform_root(f), options_.max_steps);
    harvest(by_form.cycle);
    if (by_form.head != by_surd.head || !is_rotation_of(by_form.cycle, by_surd.cycle))
      fail("equivalence", input, json_expansion(by_surd), json_expansion(by_form));

    const Integer D = f.discriminant();
    const Integer bound = khinchin_bound(f);
    for (std::size_t i = 0; i < trace.size(); ++i) {
      const QuadForm& g = trace[i];
      const bool bounded = abs(g.A) <= bound && (i == 0 || abs(g.C) <= bound);
      if (g.discriminant() != D || !bounded) {
        json got = to_json(g);
        got["step"] = i;
        fail("khinchin", input, {{"discriminant", json_int(D)}, {"bound", json_int(bound)}}, got);
        return;
      }
    }
  }

  GridOptions options_;
  VerifyReport report_;
};

}  // namespace

std::string_view to_string(VerifyKind k) {
  switch (k) {
    case VerifyKind::Palindrome:
      return "palindrome";
    case VerifyKind::Reversal:
      return "reversal";
    case VerifyKind::Equivalence:
      return "equivalence";
    case VerifyKind::Conjecture:
      return "conjecture";
    case VerifyKind::FixedPoint:
      return "fixedpoint";
  }
  return "?";
}

VerifyKind parse_verify_kind(std::string_view text) {
  for (VerifyKind k : {VerifyKind::Palindrome, VerifyKind::Reversal, VerifyKind::Equivalence, VerifyKind::Conjecture,
                       VerifyKind::FixedPoint})
    if (to_string(k) == text) return k;
  throw std::invalid_argument("unknown verify kind: " + std::string(text));
}

json to_json(const Counterexample& c) {
  return {{"kind", c.kind}, {"input", c.input}, {"expected", c.expected}, {"got", c.got}};
}

json to_json(const QuadForm& f) {
  return {{"A", json_int(f.A)},
          {"B", json_int(f.B)},
          {"C", json_int(f.C)},
          {"branch", f.branch == Branch::Plus ? "plus" : "minus"}};
}

std::vector<QuadForm> random_forms(std::size_t count, std::int64_t bound, std::uint64_t seed) {
  if (bound < 1) throw std::invalid_argument("random_forms: bound must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coef(-bound, bound);
  std::vector<QuadForm> out;
  out.reserve(count);
  while (out.size() < count) {
    QuadForm f{coef(rng), coef(rng), coef(rng), rng() % 2 ? Branch::Plus : Branch::Minus};
    const Integer D = f.discriminant();
    if (f.A.is_zero() || D.sign() <= 0 || is_perfect_square(D)) continue;
    out.push_back(f);
  }
  return out;
}

std::vector<QuadForm> monic_grid(std::int64_t pmax, std::int64_t qmax) {
  if (pmax < 0 || qmax < 0) throw std::invalid_argument("monic_grid: bounds must be non-negative");
  std::vector<QuadForm> out;
  for (std::int64_t p = -pmax; p <= pmax; ++p)
    for (std::int64_t q = -qmax; q <= qmax; ++q) {
      const QuadForm f{1, p, q, Branch::Plus};
      const Integer D = f.discriminant();
      if (D.sign() > 0 && !is_perfect_square(D)) out.push_back(f);
    }
  return out;
}

VerifyReport run_verify(VerifyKind kind, const GridOptions& options) {
  Runner runner(kind, options);
  switch (kind) {
    case VerifyKind::Palindrome:
      runner.palindrome();
      break;
    case VerifyKind::Reversal:
      runner.reversal();
      break;
    case VerifyKind::Equivalence:
      runner.equivalence();
      break;
    case VerifyKind::Conjecture:
      runner.conjecture();
      break;
    case VerifyKind::FixedPoint:
      runner.fixed_point();
      break;
  }
  return runner.take();
}

}  // namespace sl2cf
