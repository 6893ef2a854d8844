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

#include "sl2cf/stats.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace sl2cf {

namespace {

std::string describe(const UniMatrix& M) {
  std::ostringstream os;
  os << "[[" << M.k << "," << M.l << "],[" << M.m << "," << M.n << "]]";
  return os.str();
}

void add_unchecked(StatsRow& row, const UniMatrix& M, const Expansion& e) {
  const std::int64_t w = matrix_weight(M);
  const auto len = static_cast<std::int64_t>(e.cycle.size());
  const std::int64_t sum = std::accumulate(e.cycle.begin(), e.cycle.end(), std::int64_t{0});
  row.weight_total += w;
  row.sum_len += w * len;
  row.max_len = std::max(row.max_len, len);
  row.sum_elems += w * sum;
  row.max_elems = std::max(row.max_elems, sum);
  if (len > 0) row.sum_ratio += Rational(Integer(w) * sum, len);
  for (Digit d : e.cycle) row.digit_counts[d] += w;
}

bool counted(const UniMatrix& M, const SweepOptions& options) {
  if (M.l == 0) return false;
  const MatrixClass c = classify(M);
  if (c == MatrixClass::Elliptic) return false;
  return c == MatrixClass::Hyperbolic || options.include_parabolic;
}

// Expands M's slope, tagging any failure with the matrix that caused it.
Expansion expand_matrix(const UniMatrix& M, std::size_t max_steps) {
  try {
    return expand_surd(*eigen_slope(M), max_steps);
  } catch (const OverflowError& err) {
    throw OverflowError(std::string(err.what()) + " while expanding " + describe(M));
  } catch (const StepLimitError& err) {
    throw StepLimitError(std::string(err.what()) + " while expanding " + describe(M));
  }
}

std::int64_t bucket_of(std::int64_t norm_sq) {
  // least integer radius r with norm_sq <= r^2
  return isqrt(norm_sq - 1).to_int64() + 1;
}

unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

std::int64_t StatsRow::digit_total() const {
  std::int64_t total = 0;
  for (const auto& [digit, count] : digit_counts) total += count;
  return total;
}

Rational StatsRow::avg_len() const { return weight_total == 0 ? Rational{} : Rational(sum_len, weight_total); }
Rational StatsRow::avg_sum() const { return weight_total == 0 ? Rational{} : Rational(sum_elems, weight_total); }
Rational StatsRow::avg_ratio() const { return weight_total == 0 ? Rational{} : sum_ratio / Rational(weight_total); }

Rational StatsRow::freq(Digit d) const {
  const std::int64_t total = digit_total();
  if (total == 0) return {};
  auto it = digit_counts.find(d);
  return it == digit_counts.end() ? Rational{} : Rational(it->second, total);
}

void StatsRow::merge(const StatsRow& other) {
  weight_total += other.weight_total;
  sum_len += other.sum_len;
  max_len = std::max(max_len, other.max_len);
  sum_elems += other.sum_elems;
  max_elems = std::max(max_elems, other.max_elems);
  sum_ratio += other.sum_ratio;
  for (const auto& [digit, count] : other.digit_counts) digit_counts[digit] += count;
}

std::int64_t matrix_weight(const UniMatrix& M) { return M.k >= 1 ? 2 : 1; }

StatsRow accumulate(StatsRow row, const UniMatrix& M, const Expansion& e) {
  const auto slope = eigen_slope(M);
  if (!slope) throw std::invalid_argument("accumulate: " + describe(M) + " has no real eigenvector slope");
  if (slope->is_rational() != e.is_rational())
    throw std::invalid_argument("accumulate: expansion rationality does not match " + describe(M));
  const std::vector<Digit> digits = unroll(e, 1);
  if (digits.empty() || digits.front() != surd_floor(*slope).to_int64())
    throw std::invalid_argument("accumulate: expansion does not start at floor of the slope of " + describe(M));
  add_unchecked(row, M, e);
  return row;
}

std::vector<StatsRow> sweep(std::int64_t r_max, const SweepOptions& options) {
  if (r_max < 1) throw std::invalid_argument("sweep: r_max must be positive");
  const unsigned workers = resolve_workers(options.workers);
  std::vector<std::vector<StatsRow>> partial(workers, std::vector<StatsRow>(static_cast<std::size_t>(r_max) + 1));
  std::vector<std::exception_ptr> errors(workers);

  // Worker w handles every k congruent to w; merging is order independent.
  auto work = [&](unsigned w) {
    try {
      for (std::int64_t k = w; k <= r_max; k += workers) {
        for_each_in_ball(
            r_max,
            [&](const UniMatrix& M) {
              if (!counted(M, options)) return;
              add_unchecked(partial[w][static_cast<std::size_t>(bucket_of(M.norm_sq()))], M,
                            expand_matrix(M, options.max_steps));
            },
            k, k + 1);
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (const auto& err : errors)
    if (err) std::rethrow_exception(err);

  std::vector<StatsRow> rows;
  rows.reserve(static_cast<std::size_t>(r_max));
  StatsRow running;
  for (std::int64_t r = 1; r <= r_max; ++r) {
    for (const auto& buckets : partial) running.merge(buckets[static_cast<std::size_t>(r)]);
    running.r = r;
    rows.push_back(running);
  }
  return rows;
}

StatsRow radius_stats(std::int64_t r, const SweepOptions& options) {
  StatsRow row;
  row.r = r;
  for_each_in_ball(r, [&](const UniMatrix& M) {
    if (counted(M, options)) add_unchecked(row, M, expand_matrix(M, options.max_steps));
  });
  return row;
}

double gauss_kuzmin(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("gauss_kuzmin: k must be >= 1");
  const double kp1 = static_cast<double>(k) + 1.0;
  return -std::log2(1.0 - 1.0 / (kp1 * kp1));
}

std::string_view to_string(LogBase b) {
  switch (b) {
    case LogBase::Two:
      return "2";
    case LogBase::Ten:
      return "10";
    case LogBase::E:
      return "e";
  }
  return "?";
}

LogBase parse_log_base(std::string_view text) {
  if (text == "2") return LogBase::Two;
  if (text == "10") return LogBase::Ten;
  if (text == "e") return LogBase::E;
  throw std::invalid_argument("unknown log base '" + std::string(text) + "' (expected 2, 10 or e)");
}

double log_in(LogBase b, double x) {
  switch (b) {
    case LogBase::Two:
      return std::log2(x);
    case LogBase::Ten:
      return std::log10(x);
    case LogBase::E:
      return std::log(x);
  }
  return std::log(x);
}

FitResult fit_log(std::span<const std::pair<double, double>> points, LogBase base) {
  if (points.size() < 2) throw std::invalid_argument("fit_log: need at least two points");
  double mean_x = 0, mean_y = 0;
  for (const auto& [r, y] : points) {
    if (!(r >= 1)) throw std::invalid_argument("fit_log: radius below 1");
    mean_x += log_in(base, r);
    mean_y += y;
  }
  const auto n = static_cast<double>(points.size());
  mean_x /= n;
  mean_y /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (const auto& [r, y] : points) {
    const double dx = log_in(base, r) - mean_x, dy = y - mean_y;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0) throw std::invalid_argument("fit_log: need at least two distinct radii");
  FitResult fit;
  fit.base = base;
  fit.beta = sxy / sxx;
  fit.alpha = mean_y - fit.beta * mean_x;
  // explained share of the variance; a constant series is fitted exactly
  fit.r_squared = syy == 0 ? 1.0 : std::clamp(sxy * sxy / (sxx * syy), 0.0, 1.0);
  return fit;
}

std::string sweep_csv_line(const StatsRow& row) {
  std::ostringstream os;
  os << row.r << ',' << row.weight_total << ',' << row.avg_len().to_fixed(6) << ',' << row.max_len << ','
     << row.avg_sum().to_fixed(6) << ',' << row.max_elems << ',' << row.avg_ratio().to_fixed(6);
  for (Digit d = 1; d <= 3; ++d) os << ',' << row.freq(d).to_fixed(6);
  return os.str();
}

void write_sweep_csv(std::ostream& os, std::span<const StatsRow> rows) {
  os << kSweepHeader << '\n';
  for (const auto& row : rows) os << sweep_csv_line(row) << '\n';
}

std::size_t SweepTable::column_index(std::string_view name) const {
  auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) throw std::invalid_argument("no column named '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - columns.begin());
}

std::vector<std::pair<double, double>> SweepTable::series(std::string_view column) const {
  const std::size_t r_col = column_index("r"), y_col = column_index(column);
  std::vector<std::pair<double, double>> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.emplace_back(row[r_col], row[y_col]);
  return out;
}

SweepTable read_sweep_csv(std::istream& is) {
  SweepTable table;
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("sweep CSV is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kSweepHeader) throw std::runtime_error("unexpected sweep CSV header: " + line);
  std::istringstream header(line);
  for (std::string cell; std::getline(header, cell, ',');) table.columns.push_back(cell);
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<double> values;
    std::istringstream cells(line);
    for (std::string cell; std::getline(cells, cell, ',');) {
      try {
        std::size_t used = 0;
        values.push_back(std::stod(cell, &used));
        if (used != cell.size()) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        throw std::runtime_error("sweep CSV line " + std::to_string(line_no) + ": bad number '" + cell + "'");
      }
    }
    if (values.size() != table.columns.size())
      throw std::runtime_error("sweep CSV line " + std::to_string(line_no) + ": expected " +
                               std::to_string(table.columns.size()) + " fields");
    table.rows.push_back(std::move(values));
  }
  return table;
}

}  // namespace sl2cf
