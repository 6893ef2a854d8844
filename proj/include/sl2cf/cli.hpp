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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sl2cf/expansion.hpp"
#include "sl2cf/stats.hpp"
#include "sl2cf/verify.hpp"

namespace sl2cf {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kBadArguments = 2;
inline constexpr int kOverflow = 3;
inline constexpr int kStepLimit = 4;
inline constexpr int kCounterexample = 5;
inline constexpr int kIo = 6;
}  // namespace exit_code

/// Unreadable or unwritable files and malformed input tables.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Command { Enumerate, Expand, Sweep, Verify, Fit, Plot };
enum class OutputFormat { Csv, Json };

struct RunConfig {
  Command command = Command::Enumerate;
  std::int64_t radius = 10;
  /// Empty means standard output / no file.
  std::string input;
  std::string output;
  OutputFormat format = OutputFormat::Csv;
  bool include_parabolic = true;
  std::size_t max_steps = kDefaultMaxSteps;
  unsigned workers = 1;

  /// expand: exactly one of these is set.
  std::optional<Surd> surd;
  std::optional<QuadForm> qform;

  LogBase base = LogBase::Two;
  std::string column = "avg_len";

  VerifyKind verify_kind = VerifyKind::Palindrome;
  GridOptions grid;
};

/// Parses arguments (without the program name). Throws std::invalid_argument
/// with a usage message on bad input. Returns nullopt after printing help.
std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& out);

/// Executes a parsed configuration. Library errors propagate.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + execute with every error mapped to its exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sl2cf
