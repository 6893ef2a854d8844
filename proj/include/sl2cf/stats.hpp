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
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sl2cf/expansion.hpp"
#include "sl2cf/lattice.hpp"
#include "sl2cf/rational.hpp"

namespace sl2cf {

/**
 * Aggregate period statistics over the matrices of one ball.
 *
 * A matrix with k >= 1 stands for itself and its negation, so it carries
 * weight 2; k == 0 matrices carry weight 1 because their negations are
 * enumerated directly. Rational slopes count with period length 0.
 * Maxima are unweighted.
 */
struct StatsRow {
  std::int64_t r = 0;
  std::int64_t weight_total = 0;
  std::int64_t sum_len = 0;
  std::int64_t max_len = 0;
  std::int64_t sum_elems = 0;
  std::int64_t max_elems = 0;
  Rational sum_ratio;
  std::map<Digit, std::int64_t> digit_counts;

  std::int64_t digit_total() const;
  Rational avg_len() const;
  Rational avg_sum() const;
  Rational avg_ratio() const;
  /// Weighted share of digit d among all period digits; 0 when there are none.
  Rational freq(Digit d) const;

  /// Monoid merge: sums add, maxima combine, histograms add. Keeps this->r.
  void merge(const StatsRow& other);

  friend bool operator==(const StatsRow&, const StatsRow&) = default;
};

struct SweepOptions {
  bool include_parabolic = true;
  std::size_t max_steps = kDefaultMaxSteps;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned workers = 1;
};

std::int64_t matrix_weight(const UniMatrix& M);

/// Adds M with expansion e. Throws std::invalid_argument when M has no real
/// slope or e visibly does not belong to it.
StatsRow accumulate(StatsRow row, const UniMatrix& M, const Expansion& e);

/// Rows r = 1..r_max from a single enumeration of the r_max ball, each matrix
/// bucketed by ceil(sqrt(norm_sq)) and the buckets prefix-merged.
std::vector<StatsRow> sweep(std::int64_t r_max, const SweepOptions& options = {});

/// Independent single-radius computation used to cross-check sweep.
StatsRow radius_stats(std::int64_t r, const SweepOptions& options = {});

/// -log2(1 - 1/(k+1)^2). Throws std::invalid_argument for k < 1.
double gauss_kuzmin(std::int64_t k);

enum class LogBase { Two, Ten, E };

std::string_view to_string(LogBase b);
/// Accepts "2", "10", "e". Throws std::invalid_argument.
LogBase parse_log_base(std::string_view text);
double log_in(LogBase b, double x);

struct FitResult {
  double alpha = 0;
  double beta = 0;
  LogBase base = LogBase::Two;
  double r_squared = 0;
};

/// Least squares y ~ alpha + beta * log_base(r). Needs two distinct r >= 1.
FitResult fit_log(std::span<const std::pair<double, double>> points, LogBase base);

inline constexpr std::string_view kSweepHeader =
    "r,weight_total,avg_len,max_len,avg_sum,max_sum,avg_ratio,freq_1,freq_2,freq_3";

void write_sweep_csv(std::ostream& os, std::span<const StatsRow> rows);
std::string sweep_csv_line(const StatsRow& row);

/// Numeric table read back from a sweep CSV.
struct SweepTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  /// Throws std::invalid_argument for unknown column names.
  std::size_t column_index(std::string_view name) const;
  std::vector<std::pair<double, double>> series(std::string_view column) const;
};

/// Throws std::runtime_error on a header that does not match kSweepHeader or malformed rows.
SweepTable read_sweep_csv(std::istream& is);

}  // namespace sl2cf
