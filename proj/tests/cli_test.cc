// Copyright 2026 The hyperoct Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gtest/gtest.h"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string Slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult RunCli(const std::string& args) {
  const auto err_path = std::filesystem::temp_directory_path() /
                        ("hyperoct_cli_err_" + std::to_string(::getpid()));
  const std::string command =
      std::string(HYPEROCT_CLI) + " " + args + " 2>" + err_path.string();
  RunResult r;
  FILE* pipe = ::popen(command.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = ::pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = Slurp(err_path);
  std::filesystem::remove(err_path);
  return r;
}

void ExpectGolden(const std::string& args, const std::string& golden) {
  const RunResult r = RunCli(args);
  EXPECT_EQ(r.exit_code, 0) << args << "\n" << r.err;
  EXPECT_EQ(r.out, Slurp(std::filesystem::path(HYPEROCT_GOLDEN_DIR) / golden)) << args;
}

TEST(CliTest, Length) {
  ExpectGolden("length -- -1,-2,-3", "length_w0_b3.txt");
  ExpectGolden("length 1,2,3", "length_identity.txt");
  ExpectGolden("length -- 2,-1,-4,3", "length_example.txt");
  ExpectGolden("--format json length -- 2,-1,-4,3", "length_example.json");
}

TEST(CliTest, Enumerate) {
  ExpectGolden("enumerate -- -1,-2", "enumerate_w0_b2.txt");
  ExpectGolden("enumerate 1,2,3", "enumerate_identity.txt");
  ExpectGolden("--format json enumerate -- -1,-2", "enumerate_w0_b2.json");
  const RunResult r = RunCli("enumerate -- -1,-2,-3");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("count: 42\n"), std::string::npos);
}

TEST(CliTest, Count) {
  ExpectGolden("count -- -1,-2,-3,-4", "count_w0_b4.txt");
  ExpectGolden("--format csv count -- -1,-2,-3,-4", "count_w0_b4.csv");
}

TEST(CliTest, Shape) {
  ExpectGolden("shape -- 2,-1,-4,3", "shape_example.txt");
  ExpectGolden("shape -- -1,-2,-3", "shape_w0_b3.txt");
  ExpectGolden("shape -- 1,2,-3", "shape_wprime_b3.txt");
  ExpectGolden("shape --trace -- 2,-1,-4,3", "shape_example_trace.txt");
  ExpectGolden("--format json shape -- 2,-1,-4,3", "shape_example.json");
}

TEST(CliTest, Vexillary) {
  ExpectGolden("vexillary -- 2,-1,-4,3", "vexillary_true.txt");
  ExpectGolden("vexillary -- 2,-1,4,3", "vexillary_false.txt");
}

TEST(CliTest, Expect) {
  for (const char* method : {"exhaustive", "dp_counts", "hook_counts", "closed_form"}) {
    const RunResult r = RunCli(std::string("expect 3 --statistic yb --method ") + method);
    EXPECT_EQ(r.exit_code, 0) << method;
    EXPECT_EQ(r.out.substr(0, 11), "value: 2/3\n") << method;
  }
  ExpectGolden("expect 4 --statistic zero_one --method exhaustive", "expect_zero_one_4.txt");
  ExpectGolden("--format json expect 4 --statistic zero_one --method exhaustive",
               "expect_zero_one_4.json");
  ExpectGolden("--format csv expect 8 --statistic yb", "expect_yb_8.csv");
}

TEST(CliTest, Verify) {
  const RunResult r = RunCli("verify 2..4");
  EXPECT_EQ(r.exit_code, 0) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  const RunResult wide = RunCli("verify 3..7");
  EXPECT_EQ(wide.exit_code, 0) << wide.out;
  EXPECT_EQ(wide.out.find("FAIL"), std::string::npos);
}

TEST(CliTest, ErrorsAreSingleLineWithExitCodes) {
  struct Case {
    const char* args;
    int code;
    const char* needle;
  };
  const Case cases[] = {
      {"length 1,x,3", 2, "'x'"},
      {"length 1,1", 2, "repeated"},
      {"expect 2 --statistic yb", 1, "n >= 3"},
      {"enumerate --limit 4 -- -1,-2,-3", 1, "--limit"},
      {"count --dp-budget 3 -- -1,-2,-3,-4", 1, "--dp-budget"},
      {"expect 3 --method guess", 2, "error:"},
      {"frobnicate", 2, "error:"},
      {"verify 4..2", 2, "error:"},
  };
  for (const Case& c : cases) {
    const RunResult r = RunCli(c.args);
    EXPECT_EQ(r.exit_code, c.code) << c.args << "\n" << r.err;
    EXPECT_TRUE(r.out.empty()) << c.args;
    ASSERT_FALSE(r.err.empty()) << c.args;
    EXPECT_EQ(r.err.find('\n'), r.err.size() - 1) << c.args << "\n" << r.err;
    EXPECT_NE(r.err.find(c.needle), std::string::npos) << c.args << "\n" << r.err;
  }
}

TEST(CliTest, RepeatedRunsAreByteIdentical) {
  for (const char* args : {"enumerate -- -1,-2,-3", "--format json verify 2..3",
                           "shape --trace -- -1,-2,-3", "--format csv expect 5"}) {
    const RunResult a = RunCli(args);
    const RunResult b = RunCli(args);
    EXPECT_EQ(a.exit_code, b.exit_code) << args;
    EXPECT_EQ(a.out, b.out) << args;
  }
}

}  // namespace
