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

#include "sl2cf/cli.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sl2cf/cycles.hpp"
#include "sl2cf/lattice.hpp"

namespace sl2cf {

namespace {

std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

std::vector<Integer> parse_integer_list(const std::string& text, std::size_t count, const char* what) {
  std::vector<Integer> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(parse_integer(item));
  if (out.size() != count)
    throw std::invalid_argument(std::string(what) + " expects " + std::to_string(count) + " comma-separated integers");
  return out;
}

unsigned parse_workers(std::string_view text) {
  unsigned value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size())
    throw std::invalid_argument("invalid worker count: '" + std::string(text) + "'");
  return value;
}

std::string format_list(const std::vector<Digit>& digits) {
  std::string s = "[";
  for (std::size_t i = 0; i < digits.size(); ++i) s += (i ? ", " : "") + std::to_string(digits[i]);
  return s + "]";
}

std::string_view yes_no(bool b) { return b ? "true" : "false"; }

/// Standard stream unless a path is given; write failures surface as IoError.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : path_(path), os_(&fallback) {
    if (path.empty()) return;
    file_.open(path, std::ios::out | std::ios::trunc);
    if (!file_) throw IoError("cannot open for writing: " + path);
    os_ = &file_;
  }
  std::ostream& get() { return *os_; }
  bool is_file() const { return !path_.empty(); }
  void finish() {
    os_->flush();
    if (!*os_) throw IoError("write failed: " + (path_.empty() ? std::string("<stdout>") : path_));
  }

 private:
  std::string path_;
  std::ofstream file_;
  std::ostream* os_;
};

SweepTable load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open for reading: " + path);
  try {
    return read_sweep_csv(in);
  } catch (const std::runtime_error& e) {
    throw IoError(path + ": " + e.what());
  }
}

std::vector<std::pair<double, double>> fit_points(const RunConfig& c, const SweepTable& table) {
  std::vector<std::pair<double, double>> points;
  for (const auto& pt : table.series(c.column))
    if (pt.first >= static_cast<double>(c.radius)) points.push_back(pt);
  return points;
}

int do_enumerate(const RunConfig& c, std::ostream& out) {
  Sink sink(c.output, out);
  std::ostream& os = sink.get();
  if (c.format == OutputFormat::Csv) os << "k,l,m,n,norm_sq,class\n";
  for_each_in_ball(c.radius, [&](const UniMatrix& M) {
    if (c.format == OutputFormat::Csv) {
      os << M.k << ',' << M.l << ',' << M.m << ',' << M.n << ',' << M.norm_sq() << ',' << to_string(classify(M))
         << '\n';
    } else {
      nlohmann::json j = {{"k", M.k},         {"l", M.l}, {"m", M.m}, {"n", M.n}, {"norm_sq", M.norm_sq()},
                          {"class", to_string(classify(M))}};
      os << j.dump() << '\n';
    }
  });
  sink.finish();
  return exit_code::kOk;
}

int do_expand(const RunConfig& c, std::ostream& out) {
  std::optional<QuadForm> form = c.qform;
  Surd x;
  if (c.surd) {
    x = normalize(*c.surd);
    if (!x.is_rational()) form = surd_to_qform(x);
  } else {
    expand_qform(*form, c.max_steps);  // rejects rational and complex roots
    x = qform_root(*form);
  }
  const Expansion e = expand_surd(x, c.max_steps);
  out << "input: " << to_string(x) << '\n';
  if (form)
    out << "form: " << form->A << ',' << form->B << ',' << form->C << ' '
        << (form->branch == Branch::Plus ? "plus" : "minus") << '\n';
  out << "rational: " << yes_no(e.is_rational()) << '\n';
  out << "head: " << format_list(e.head) << '\n';
  out << "cycle: " << format_list(e.cycle) << '\n';
  out << "preperiod_len: " << e.preperiod_len << '\n';
  if (e.is_rational()) return exit_code::kOk;

  const Expansion other = expand_surd(conjugate(x), c.max_steps);
  const Expansion by_form = expand_qform(*form, c.max_steps);
  const auto shift = shift_distance(e.cycle, other.cycle);
  out << "palindrome: " << yes_no(is_cyclic_palindrome(e.cycle)) << '\n';
  out << "near_straight_palindrome: " << yes_no(is_near_straight_palindrome(e.cycle)) << '\n';
  out << "conjugate_cycle: " << format_list(other.cycle) << '\n';
  out << "conjugate_reversed: " << yes_no(shift.has_value()) << '\n';
  out << "shift_distance: " << (shift ? std::to_string(*shift) : "none") << '\n';
  out << "fixed_point: " << yes_no(verify_fixed_point(e.cycle)) << '\n';
  out << "algorithms_agree: " << yes_no(by_form.head == e.head && is_rotation_of(by_form.cycle, e.cycle)) << '\n';
  return exit_code::kOk;
}

int do_sweep(const RunConfig& c, std::ostream& out, std::ostream& err) {
  SweepOptions options;
  options.include_parabolic = c.include_parabolic;
  options.max_steps = c.max_steps;
  options.workers = c.workers;
  const auto rows = sweep(c.radius, options);

  Sink sink(c.output, out);
  write_sweep_csv(sink.get(), rows);
  sink.finish();

  std::ostream& summary = sink.is_file() ? out : err;
  const StatsRow& last = rows.back();
  summary << "radius: " << last.r << '\n'
          << "weight_total: " << last.weight_total << '\n'
          << "avg_len: " << last.avg_len().to_fixed(6) << '\n'
          << "max_len: " << last.max_len << '\n'
          << "avg_sum: " << last.avg_sum().to_fixed(6) << '\n'
          << "max_sum: " << last.max_elems << '\n'
          << "avg_ratio: " << last.avg_ratio().to_fixed(6) << '\n';
  return exit_code::kOk;
}

int do_verify(const RunConfig& c, std::ostream& out) {
  const VerifyReport report = run_verify(c.verify_kind, c.grid);
  Sink sink(c.output, out);
  for (const auto& cex : report.counterexamples) sink.get() << to_json(cex).dump() << '\n';
  sink.finish();

  out << "kind: " << to_string(report.kind) << '\n'
      << "checked: " << report.checked << '\n'
      << "counterexamples: " << report.counterexamples.size() << '\n'
      << "overflow_aborts: " << report.overflow_aborts << '\n'
      << "distinct_periods: " << report.cycles.size() << '\n';
  if (report.kind == VerifyKind::Palindrome && report.periods_seen > 0) {
    out << "near_straight_palindromes: " << report.near_straight << '/' << report.periods_seen << '\n';
    for (const auto& [d, n] : report.shift_histogram) out << "shift_distance " << d << ": " << n << '\n';
  }
  if (!report.ok()) return exit_code::kCounterexample;
  if (report.overflow_aborts > 0) return exit_code::kOverflow;
  return exit_code::kOk;
}

int do_fit(const RunConfig& c, std::ostream& out) {
  const SweepTable table = load_table(c.input);
  const auto points = fit_points(c, table);
  const FitResult fit = fit_log(points, c.base);
  out << "column: " << c.column << '\n'
      << "base: " << to_string(fit.base) << '\n'
      << "alpha: " << fixed6(fit.alpha) << '\n'
      << "beta: " << fixed6(fit.beta) << '\n'
      << "r_squared: " << fixed6(fit.r_squared) << '\n'
      << "points: " << points.size() << '\n';
  return exit_code::kOk;
}

int do_plot(const RunConfig& c, std::ostream& out) {
  const SweepTable table = load_table(c.input);
  const auto points = fit_points(c, table);
  const FitResult fit = fit_log(points, c.base);
  const std::string log_expr = c.base == LogBase::E    ? "log(x)"
                               : c.base == LogBase::Ten ? "log10(x)"
                                                        : "log(x) / log(2)";
  Sink sink(c.output, out);
  std::ostream& os = sink.get();
  os << "# gnuplot script: " << c.column << " against r with a logarithmic fit\n"
     << "$data << EOD\n";
  for (const auto& [r, y] : points) os << static_cast<long long>(r) << ' ' << fixed6(y) << '\n';
  os << "EOD\n"
     << "alpha = " << fixed6(fit.alpha) << '\n'
     << "beta = " << fixed6(fit.beta) << '\n'
     << "f(x) = alpha + beta * " << log_expr << '\n'
     << "set xlabel \"r\"\n"
     << "set ylabel \"" << c.column << "\"\n"
     << "set key left top\n"
     << "plot $data using 1:2 with points pt 7 ps 0.5 title \"" << c.column << "\", \\\n"
     << "     f(x) with lines title sprintf(\"%.3f + %.3f log_" << to_string(c.base)
     << " r  (r^2 = " << fixed6(fit.r_squared) << ")\", alpha, beta)\n";
  sink.finish();
  return exit_code::kOk;
}

}  // namespace

std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Periodic continued fractions of SL(2,Z) eigenvector slopes", "sl2cf"};
  app.require_subcommand(1);
  RunConfig c;
  std::string format = "csv", surd_text, qform_text, monic_text, branch = "plus", base = "2", kind;
  unsigned workers = 1;

  auto* en = app.add_subcommand("enumerate", "List the matrices of the norm ball, deterministic order");
  en->add_option("--radius,-r", c.radius, "Ball radius")->required()->check(CLI::PositiveNumber);
  en->add_option("--format", format, "csv or json (one object per line)")->check(CLI::IsMember({"csv", "json"}));
  en->add_option("--output,-o", c.output, "Output file (default stdout)");

  auto* ex = app.add_subcommand("expand", "Expand one quadratic irrationality");
  auto* o_surd = ex->add_option("--surd", surd_text, "u,v,w,z for (u + v sqrt(w)) / z");
  auto* o_qform = ex->add_option("--qform", qform_text, "A,B,C for A x^2 + B x + C");
  auto* o_monic = ex->add_option("--monic", monic_text, "p,q for x^2 + p x + q");
  o_surd->excludes(o_qform)->excludes(o_monic);
  o_qform->excludes(o_monic);
  ex->add_option("--branch", branch, "Root of the form: plus or minus")
      ->check(CLI::IsMember({"plus", "minus"}))
      ->excludes(o_surd);
  ex->add_option("--max-steps", c.max_steps, "Step limit")->check(CLI::PositiveNumber);

  auto* sw = app.add_subcommand("sweep", "Per-radius period statistics as CSV");
  sw->add_option("--max-radius,-r", c.radius, "Largest radius")->required()->check(CLI::PositiveNumber);
  sw->add_option("--output,-o", c.output, "CSV file (default stdout, summary then goes to stderr)");
  auto* hyp = sw->add_flag("--hyperbolic-only", "Leave rational slopes out of the counts");
  auto* o_workers = sw->add_option("--workers,-j", workers, "Worker threads, 0 for all cores");
  sw->add_option("--max-steps", c.max_steps, "Step limit")->check(CLI::PositiveNumber);

  auto* ve = app.add_subcommand("verify", "Check a property over a grid; counterexamples as JSON lines");
  ve->add_option("kind", kind, "palindrome, reversal, equivalence, conjecture or fixedpoint")
      ->required()
      ->check(CLI::IsMember({"palindrome", "reversal", "equivalence", "conjecture", "fixedpoint"}));
  ve->add_option("--pmax", c.grid.pmax, "Monic grid bound on |p|")->check(CLI::PositiveNumber);
  ve->add_option("--qmax", c.grid.qmax, "Monic grid bound on |q|")->check(CLI::PositiveNumber);
  ve->add_option("--radius", c.grid.radius, "Matrix ball radius")->check(CLI::PositiveNumber);
  ve->add_option("--samples", c.grid.samples, "Random forms");
  ve->add_option("--coef", c.grid.coef, "Random form coefficient bound")->check(CLI::PositiveNumber);
  ve->add_option("--seed", c.grid.seed, "Random form seed");
  ve->add_option("--max-steps", c.grid.max_steps, "Step limit")->check(CLI::PositiveNumber);
  ve->add_option("--report,-o", c.output, "Counterexample file (default stdout)");

  auto* fi = app.add_subcommand("fit", "Fit alpha + beta log(r) to a sweep column");
  auto* pl = app.add_subcommand("plot", "Write a gnuplot script with the data and the fitted curve");
  for (auto* sub : {fi, pl}) {
    sub->add_option("--input,-i", c.input, "Sweep CSV")->required();
    sub->add_option("--column,-c", c.column, "Column to fit");
    sub->add_option("--base,-b", base, "Logarithm base: 2, 10 or e")->check(CLI::IsMember({"2", "10", "e"}));
    sub->add_option("--min-radius", c.radius, "Ignore rows below this radius")->check(CLI::PositiveNumber);
  }
  pl->add_option("--output,-o", c.output, "Script file (default stdout)");

  c.radius = 1;
  try {
    std::vector<std::string> reversed_args(args.rbegin(), args.rend());
    app.parse(reversed_args);
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw std::invalid_argument(e.what());
  }

  const CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  if (name == "enumerate") c.command = Command::Enumerate;
  if (name == "expand") c.command = Command::Expand;
  if (name == "sweep") c.command = Command::Sweep;
  if (name == "verify") c.command = Command::Verify;
  if (name == "fit") c.command = Command::Fit;
  if (name == "plot") c.command = Command::Plot;

  c.format = format == "json" ? OutputFormat::Json : OutputFormat::Csv;
  c.base = parse_log_base(base);
  c.include_parabolic = hyp->count() == 0;
  if (c.command == Command::Verify) c.verify_kind = parse_verify_kind(kind);

  c.workers = workers;
  if (o_workers->count() == 0)
    if (const char* env = std::getenv("SL2CF_WORKERS"); env && *env) c.workers = parse_workers(env);

  if (c.command == Command::Expand) {
    const Branch b = branch == "minus" ? Branch::Minus : Branch::Plus;
    if (!surd_text.empty()) {
      const auto s = parse_integer_list(surd_text, 4, "--surd");
      c.surd = Surd{s[0], s[1], s[2], s[3]};
    } else if (!qform_text.empty()) {
      const auto f = parse_integer_list(qform_text, 3, "--qform");
      c.qform = QuadForm{f[0], f[1], f[2], b};
    } else if (!monic_text.empty()) {
      const auto f = parse_integer_list(monic_text, 2, "--monic");
      c.qform = QuadForm{1, f[0], f[1], b};
    } else {
      throw std::invalid_argument("expand needs one of --surd, --qform, --monic");
    }
  }
  return c;
}

int execute(const RunConfig& c, std::ostream& out, std::ostream& err) {
  switch (c.command) {
    case Command::Enumerate:
      return do_enumerate(c, out);
    case Command::Expand:
      return do_expand(c, out);
    case Command::Sweep:
      return do_sweep(c, out, err);
    case Command::Verify:
      return do_verify(c, out);
    case Command::Fit:
      return do_fit(c, out);
    case Command::Plot:
      return do_plot(c, out);
  }
  return exit_code::kBadArguments;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    const auto config = parse_args(args, out);
    if (!config) return exit_code::kOk;
    return execute(*config, out, err);
  } catch (const OverflowError& e) {
    err << "overflow: " << e.what() << '\n';
    return exit_code::kOverflow;
  } catch (const StepLimitError& e) {
    err << "step limit: " << e.what() << '\n';
    return exit_code::kStepLimit;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return exit_code::kIo;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\nRun with --help for usage.\n";
    return exit_code::kBadArguments;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kBadArguments;
  }
}

}  // namespace sl2cf
