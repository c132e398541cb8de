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

// Command-line front end. Exit codes: 0 success, 1 domain error (budget,
// validity range, failed verification), 2 parse or usage error.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hyperoct/errors.h"
#include "hyperoct/expectations.h"
#include "hyperoct/lambda_b.h"
#include "hyperoct/patterns.h"
#include "hyperoct/reduced_words.h"
#include "hyperoct/signed_permutation.h"
#include "hyperoct/verify.h"
#include "json.hpp"

namespace {

using hyperoct::BigInt;
using hyperoct::SignedPermutation;
using Json = nlohmann::ordered_json;

enum class Format { kText, kJson, kCsv };

struct Globals {
  Format format = Format::kText;
  int limit = hyperoct::kDefaultEnumerationLimit;
  int dp_budget = hyperoct::kDefaultDpBudget;
};

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string JoinInts(const std::vector<int>& v, const char* sep) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

void CmdLength(const Globals& g, const std::string& text) {
  const SignedPermutation w = SignedPermutation::Parse(text);
  const int length = hyperoct::Length(w);
  const std::vector<int> descents = hyperoct::RightDescents(w);
  switch (g.format) {
    case Format::kText:
      std::cout << "length: " << length << "\n"
                << "right_descents: {" << JoinInts(descents, ",") << "}\n";
      break;
    case Format::kJson: {
      Json j;
      j["permutation"] = w.ToString();
      j["length"] = length;
      j["right_descents"] = descents;
      std::cout << j.dump() << "\n";
      break;
    }
    case Format::kCsv:
      std::cout << "permutation,length,right_descents\n"
                << CsvField(w.ToString()) << "," << length << ","
                << JoinInts(descents, " ") << "\n";
      break;
  }
}

void CmdEnumerate(const Globals& g, const std::string& text) {
  const SignedPermutation w = SignedPermutation::Parse(text);
  const auto words = hyperoct::EnumerateReducedWords(w, g.limit);
  switch (g.format) {
    case Format::kText:
      for (const auto& word : words) std::cout << word.ToString() << "\n";
      std::cout << "count: " << words.size() << "\n";
      break;
    case Format::kJson: {
      Json j;
      j["permutation"] = w.ToString();
      j["words"] = Json::array();
      for (const auto& word : words) j["words"].push_back(word.ToString());
      j["count"] = std::to_string(words.size());
      std::cout << j.dump() << "\n";
      break;
    }
    case Format::kCsv:
      std::cout << "word\n";
      for (const auto& word : words) std::cout << CsvField(word.ToString()) << "\n";
      break;
  }
}

void CmdCount(const Globals& g, const std::string& text) {
  const SignedPermutation w = SignedPermutation::Parse(text);
  const BigInt count = hyperoct::CountReducedWords(w, g.dp_budget);
  switch (g.format) {
    case Format::kText:
      std::cout << "count: " << count << "\n";
      break;
    case Format::kJson: {
      Json j;
      j["permutation"] = w.ToString();
      j["count"] = count.str();
      std::cout << j.dump() << "\n";
      break;
    }
    case Format::kCsv:
      std::cout << "permutation,count\n" << CsvField(w.ToString()) << "," << count
                << "\n";
      break;
  }
}

void CmdShape(const Globals& g, const std::string& text, bool trace) {
  const SignedPermutation w = SignedPermutation::Parse(text);
  const auto inputs = hyperoct::ComputeShapeInputs(w);
  const auto run = hyperoct::TraceLambdaB(
      w, hyperoct::RowReadingTableau(inputs.negative_shape),
      hyperoct::RowReadingTableau(inputs.code_shape));
  const BigInt f = hyperoct::CountSytShifted(run.shape);
  const bool vexillary = hyperoct::IsVexillaryTypeB(w);
  switch (g.format) {
    case Format::kText:
      std::cout << "shape: " << run.shape.ToString() << "\n"
                << "standard_tableaux: " << f << "\n"
                << "vexillary: " << (vexillary ? "true" : "false") << "\n";
      if (trace) {
        std::cout << "glued:\n" << run.glued.Render()
                  << "slides: " << JoinInts(run.slides_per_marker, " ") << "\n"
                  << "result:\n" << run.result.Render();
      }
      break;
    case Format::kJson: {
      Json j;
      j["permutation"] = w.ToString();
      j["shape"] = std::vector<int>(run.shape.parts().begin(), run.shape.parts().end());
      j["standard_tableaux"] = f.str();
      j["vexillary"] = vexillary;
      std::cout << j.dump() << "\n";
      break;
    }
    case Format::kCsv:
      std::cout << "permutation,shape,standard_tableaux,vexillary\n"
                << CsvField(w.ToString()) << "," << CsvField(run.shape.ToString())
                << "," << f << "," << (vexillary ? "true" : "false") << "\n";
      break;
  }
}

void CmdVexillary(const Globals& g, const std::string& text) {
  const SignedPermutation w = SignedPermutation::Parse(text);
  const auto obstruction = hyperoct::FindVexillaryObstruction(w);
  switch (g.format) {
    case Format::kText:
      std::cout << "vexillary: " << (obstruction ? "false" : "true") << "\n";
      if (obstruction) std::cout << "contains: " << obstruction->ToString() << "\n";
      break;
    case Format::kJson: {
      Json j;
      j["permutation"] = w.ToString();
      j["vexillary"] = !obstruction;
      j["obstruction"] = obstruction ? Json(obstruction->ToString()) : Json(nullptr);
      std::cout << j.dump() << "\n";
      break;
    }
    case Format::kCsv:
      std::cout << "permutation,vexillary,obstruction\n"
                << CsvField(w.ToString()) << "," << (obstruction ? "false" : "true")
                << "," << (obstruction ? CsvField(obstruction->ToString()) : "")
                << "\n";
      break;
  }
}

void CmdExpect(const Globals& g, int n, const std::string& statistic,
               const std::string& method) {
  const auto report = hyperoct::Expectation(
      n, hyperoct::ParseStatistic(statistic), hyperoct::ParseMethod(method),
      g.limit, g.dp_budget);
  const std::string words = report.total_words ? report.total_words->str() : "";
  switch (g.format) {
    case Format::kText:
      std::cout << "value: " << hyperoct::ToString(report.value) << "\n"
                << "n: " << report.n << "\n"
                << "statistic: " << hyperoct::StatisticName(report.statistic) << "\n"
                << "method: " << hyperoct::MethodName(report.method) << "\n";
      if (report.total_words) std::cout << "total_words: " << words << "\n";
      break;
    case Format::kJson:
      std::cout << report.ToJson() << "\n";
      break;
    case Format::kCsv:
      std::cout << "n,statistic,method,numerator,denominator,total_words\n"
                << report.n << "," << hyperoct::StatisticName(report.statistic) << ","
                << hyperoct::MethodName(report.method) << ","
                << hyperoct::Numerator(report.value) << ","
                << hyperoct::Denominator(report.value) << "," << words << "\n";
      break;
  }
}

// "a..b" or a single "a".
std::pair<int, int> ParseRange(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (s.empty() || used != s.size() || v < 1) {
      throw hyperoct::ParseError("bad token '" + s + "' in range '" + text + "'");
    }
    return v;
  };
  const size_t dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = to_int(text);
    return {v, v};
  }
  const int lo = to_int(text.substr(0, dots));
  const int hi = to_int(text.substr(dots + 2));
  if (lo > hi) throw hyperoct::ParseError("empty range '" + text + "'");
  return {lo, hi};
}

bool CmdVerify(const Globals& g, const std::string& range, int dp_budget) {
  hyperoct::VerifyOptions options;
  std::tie(options.min_n, options.max_n) = ParseRange(range);
  options.enumeration_limit = g.limit;
  options.dp_budget = dp_budget;
  const auto results = hyperoct::RunVerification(options);
  const bool ok = hyperoct::AllPassed(results);
  switch (g.format) {
    case Format::kText: {
      int failed = 0;
      for (const auto& r : results) {
        std::string name = r.name;
        name.resize(std::max<size_t>(name.size(), 22), ' ');
        std::cout << (r.passed ? "PASS  " : "FAIL  ") << name << "n=" << r.n;
        if (!r.passed) std::cout << "  " << r.detail;
        std::cout << "\n";
        if (!r.passed) ++failed;
      }
      std::cout << (ok ? "all " + std::to_string(results.size()) + " checks passed"
                       : std::to_string(failed) + " of " +
                             std::to_string(results.size()) + " checks failed")
                << "\n";
      break;
    }
    case Format::kJson: {
      Json j = Json::array();
      for (const auto& r : results) {
        j.push_back({{"check", r.name}, {"n", r.n}, {"passed", r.passed},
                     {"detail", r.detail}});
      }
      std::cout << j.dump() << "\n";
      break;
    }
    case Format::kCsv:
      std::cout << "check,n,passed,detail\n";
      for (const auto& r : results) {
        std::cout << r.name << "," << r.n << "," << (r.passed ? "true" : "false")
                  << "," << CsvField(r.detail) << "\n";
      }
      break;
  }
  return ok;
}

std::string OneLine(std::string s) {
  for (char& c : s) {
    if (c == '\n') c = ' ';
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reduced words, shifted shapes and factor expectations in B_n"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--limit", g.limit, "Largest word length to enumerate")
      ->capture_default_str();
  int dp_budget = -1;
  app.add_option("--dp-budget", dp_budget,
                 "Largest rank for reduced-word counting (default 8; 7 for "
                 "expect and verify)");

  std::string perm;
  auto add_perm = [&](CLI::App* cmd) {
    cmd->add_option("permutation", perm, "Window, e.g. 2,-1,-4,3")->required();
  };
  CLI::App* length = app.add_subcommand("length", "Length and right descents");
  add_perm(length);
  CLI::App* enumerate = app.add_subcommand("enumerate", "List R(w) lexicographically");
  add_perm(enumerate);
  CLI::App* count = app.add_subcommand("count", "Count R(w) by dynamic programming");
  add_perm(count);
  bool trace = false;
  CLI::App* shape = app.add_subcommand("shape", "Shifted shape lambda^B(w)");
  add_perm(shape);
  shape->add_flag("--trace", trace, "Print the glued and final tableaux");
  CLI::App* vexillary = app.add_subcommand("vexillary", "Type-B vexillarity test");
  add_perm(vexillary);

  int n = 0;
  std::string statistic = "yb";
  std::string method = "hook_counts";
  CLI::App* expect = app.add_subcommand("expect", "Expected factor count over R(w_0)");
  expect->add_option("n", n, "Rank")->required();
  expect->add_option("--statistic", statistic, "yb or zero_one")->capture_default_str();
  expect->add_option("--method", method,
                     "exhaustive, dp_counts, hook_counts or closed_form")
      ->capture_default_str();

  std::string range;
  CLI::App* verify = app.add_subcommand("verify", "Run the identity suite on a rank range");
  verify->add_option("range", range, "Ranks, e.g. 2..4")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << OneLine(e.what()) << "\n";
    return 2;
  }

  g.format = format == "json" ? Format::kJson
             : format == "csv" ? Format::kCsv
                               : Format::kText;
  const bool expectation_command = expect->parsed() || verify->parsed();
  g.dp_budget = dp_budget >= 0 ? dp_budget
                : expectation_command ? hyperoct::kDefaultExpectationDpBudget
                                      : hyperoct::kDefaultDpBudget;

  try {
    if (length->parsed()) CmdLength(g, perm);
    if (enumerate->parsed()) CmdEnumerate(g, perm);
    if (count->parsed()) CmdCount(g, perm);
    if (shape->parsed()) CmdShape(g, perm, trace);
    if (vexillary->parsed()) CmdVexillary(g, perm);
    if (expect->parsed()) CmdExpect(g, n, statistic, method);
    if (verify->parsed() && !CmdVerify(g, range, g.dp_budget)) return 1;
  } catch (const hyperoct::ParseError& e) {
    std::cerr << "error: " << OneLine(e.what()) << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << OneLine(e.what()) << "\n";
    return 1;
  }
  return 0;
}
