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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "sl2cf/cli.hpp"

using namespace sl2cf;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("sl2cf_test_cli_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("expand --monic 4,1") {
  const Result r = call({"expand", "--monic", "4,1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("head: [-1]\n") != std::string::npos);
  CHECK(r.out.find("cycle: [1, 2]\n") != std::string::npos);
  CHECK(r.out.find("palindrome: true\n") != std::string::npos);
  CHECK(r.out.find("algorithms_agree: true\n") != std::string::npos);
}

TEST_CASE("expand input forms") {
  CHECK(call({"expand", "--surd", "-4,1,12,2"}).out.find("cycle: [1, 2]") != std::string::npos);
  CHECK(call({"expand", "--qform", "1,-1,-1"}).out.find("head: []\ncycle: [1]\n") != std::string::npos);
  const Result minus = call({"expand", "--monic", "0,-2", "--branch", "minus"});
  CHECK(minus.out.find("head: [-2, 1, 1]\ncycle: [2]") != std::string::npos);
  const Result rational = call({"expand", "--surd", "5,0,0,3"});
  CHECK(rational.code == 0);
  CHECK(rational.out.find("head: [1, 1, 2]\ncycle: []") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(call({}).code == exit_code::kBadArguments);
  CHECK(call({"expand"}).code == exit_code::kBadArguments);
  CHECK(call({"expand", "--monic", "4"}).code == exit_code::kBadArguments);
  CHECK(call({"expand", "--monic", "0,-4"}).code == exit_code::kBadArguments);
  CHECK(call({"expand", "--surd", "1,1,5,0"}).code == exit_code::kBadArguments);
  CHECK(call({"expand", "--surd", "1,1,5,2", "--monic", "4,1"}).code == exit_code::kBadArguments);
  CHECK(call({"sweep", "--max-radius", "0"}).code == exit_code::kBadArguments);
  CHECK(call({"verify", "sideways"}).code == exit_code::kBadArguments);
  CHECK(call({"expand", "--monic", "0,-2", "--max-steps", "1"}).code == exit_code::kStepLimit);
  CHECK(call({"expand", "--qform", "170141183460469231731687303715884105727,1,-1"}).code == exit_code::kOverflow);
  CHECK(call({"fit", "--input", temp_path("missing.csv").string()}).code == exit_code::kIo);
  CHECK(call({"sweep", "--max-radius", "3", "-o", "/nonexistent/dir/out.csv"}).code == exit_code::kIo);
  CHECK(call({"--help"}).code == exit_code::kOk);
}

TEST_CASE("verify palindrome on the monic grid") {
  const Result r = call({"verify", "palindrome", "--pmax", "100", "--qmax", "100"});
  CHECK(r.code == 0);
  CHECK(r.out.find("counterexamples: 0\n") != std::string::npos);
  CHECK(r.out.rfind("kind: palindrome", 0) == 0);
}

TEST_CASE("verify report file and counterexample line shape") {
  const auto report = temp_path("report.jsonl");
  const Result r = call({"verify", "reversal", "--radius", "10", "--samples", "20", "-o", report.string()});
  CHECK(r.code == 0);
  CHECK(slurp(report).empty());
  Counterexample c{"palindrome", {{"p", 1}}, "cyclic palindrome", {{"cycle", {1, 2, 3}}}};
  CHECK(to_json(c).dump() ==
        R"({"expected":"cyclic palindrome","got":{"cycle":[1,2,3]},"input":{"p":1},"kind":"palindrome"})");
}

TEST_CASE("enumerate formats") {
  const Result csv = call({"enumerate", "--radius", "2"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("k,l,m,n,norm_sq,class\n", 0) == 0);
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 14);
  CHECK(csv.out.find("1,0,0,1,2,parabolic\n") != std::string::npos);
  const Result json = call({"enumerate", "--radius", "2", "--format", "json"});
  CHECK(std::count(json.out.begin(), json.out.end(), '\n') == 13);
  CHECK(json.out.find(R"("class":"elliptic")") != std::string::npos);
}

TEST_CASE("sweep, fit and plot round trip") {
  const auto csv = temp_path("sweep.csv");
  const Result s = call({"sweep", "--max-radius", "100", "-o", csv.string()});
  REQUIRE(s.code == 0);
  CHECK(s.out.find("max_len: 8\n") != std::string::npos);
  const std::string text = slurp(csv);
  CHECK(text.find("\n100,") != std::string::npos);
  const auto row100 = text.substr(text.find("\n100,") + 1);
  CHECK(row100.substr(0, row100.find('\n')).find(",8,") != std::string::npos);

  for (const char* column : {"avg_len", "avg_sum", "avg_ratio", "freq_1"}) {
    const Result f = call({"fit", "-i", csv.string(), "-c", column, "-b", "e"});
    CHECK(f.code == 0);
    CHECK(f.out.find("r_squared: ") != std::string::npos);
  }
  CHECK(call({"fit", "-i", csv.string(), "-c", "nope"}).code == exit_code::kBadArguments);

  const Result p = call({"plot", "-i", csv.string(), "-c", "avg_len", "--min-radius", "5"});
  CHECK(p.code == 0);
  CHECK(p.out.find("$data << EOD\n5 ") != std::string::npos);
  CHECK(p.out.find("f(x) = alpha + beta * log(x) / log(2)") != std::string::npos);

  std::ofstream(temp_path("bad.csv")) << "r,avg\n1,2\n";
  CHECK(call({"fit", "-i", temp_path("bad.csv").string()}).code == exit_code::kIo);
}

TEST_CASE("sweep output is byte-identical across runs and worker counts") {
  const Result a = call({"sweep", "--max-radius", "60"});
  const Result b = call({"sweep", "--max-radius", "60", "--workers", "4"});
  setenv("SL2CF_WORKERS", "3", 1);
  const Result c = call({"sweep", "--max-radius", "60"});
  setenv("SL2CF_WORKERS", "many", 1);
  const Result d = call({"sweep", "--max-radius", "60"});
  unsetenv("SL2CF_WORKERS");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  CHECK(d.code == exit_code::kBadArguments);
  CHECK(a.err.find("radius: 60") != std::string::npos);
}

TEST_CASE("hyperbolic-only changes the counts") {
  const Result all = call({"sweep", "--max-radius", "20"});
  const Result hyp = call({"sweep", "--max-radius", "20", "--hyperbolic-only"});
  CHECK(all.out != hyp.out);
}
