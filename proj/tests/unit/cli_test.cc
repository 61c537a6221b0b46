// Copyright 2026 The lambdagen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "lambdagen/counting.h"
#include "lambdagen/terms.h"
#include "lambdagen/typing.h"

namespace lambdagen::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result RunCli(const std::vector<std::string>& args,
              const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = Run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

TEST(Cli, CountExamples) {
  EXPECT_EQ(RunCli({"count", "lambda", "42"}).out, "7395529009\n");
  EXPECT_EQ(RunCli({"count", "closed", "24"}).out, "8574\n");
  EXPECT_EQ(RunCli({"count", "bounded:1", "15"}).out, "118\n");
  EXPECT_EQ(RunCli({"count", "motzkin", "5"}).out, "9\n");
  EXPECT_EQ(RunCli({"count", "binary", "7"}).out, "5\n");
  EXPECT_EQ(RunCli({"count", "lambda", "200"}).out, CountPlain(200).str() + "\n");
}

TEST(Cli, CriticalAndTune) {
  EXPECT_EQ(RunCli({"critical", "lambda"}).out, "0.509308127024237\n");
  EXPECT_EQ(RunCli({"critical", "binary"}).out, "0.5\n");
  EXPECT_EQ(RunCli({"tune", "lambda", "--mean", "1000"}).out,
            "0.509307306321404\n");
  EXPECT_EQ(RunCli({"tune", "closed", "--mean", "10"}).code, kExitUsage);
  EXPECT_EQ(RunCli({"tune", "lambda", "--mean", "1"}).code, kExitDomain);
}

TEST(Cli, UnrankAndRank) {
  EXPECT_EQ(RunCli({"unrank", "lambda", "2", "1"}).out, "1\n");
  EXPECT_EQ(RunCli({"unrank", "lambda", "6", "4"}).out, "5\n");
  EXPECT_EQ(RunCli({"unrank", "closed", "6", "1"}).out, "λλ1\n");
  EXPECT_EQ(RunCli({"unrank", "lambda", "6", "1", "--format", "tromp"}).out,
            "000010\n");
  EXPECT_EQ(RunCli({"unrank", "lambda", "6", "5"}).code, kExitDomain);
  EXPECT_EQ(RunCli({"unrank", "motzkin", "6", "1"}).code, kExitUsage);
  EXPECT_EQ(RunCli({"unrank", "lambda", "6", "x"}).code, kExitUsage);
  EXPECT_EQ(RunCli({"rank", "6"}, "λλ1\n").out, "1\n");
  EXPECT_EQ(RunCli({"rank", "6"}, "5").out, "4\n");
  EXPECT_EQ(RunCli({"rank", "7"}, "5").code, kExitDomain);
  EXPECT_EQ(RunCli({"rank", "6"}, "λ(").code, kExitDomain);
}

TEST(Cli, TypecheckEncodeDecode) {
  EXPECT_EQ(RunCli({"typecheck"}, "λ1\nλ(1 1)\n\\\\(1 2)\n").out,
            "a → a\nuntypable\na → (a → b) → b\n");
  EXPECT_EQ(RunCli({"encode"}, "λλ(1 2)\n1\n").out, "00000110110\n10\n");
  EXPECT_EQ(RunCli({"decode"}, "00000110110\n 0010 \n").out, "λλ(1 2)\nλ1\n");
  const Result bad = RunCli({"decode"}, "001\n");
  EXPECT_EQ(bad.code, kExitDomain);
  EXPECT_TRUE(bad.out.empty());
  EXPECT_FALSE(bad.err.empty());
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(RunCli({}).code, kExitUsage);
  EXPECT_EQ(RunCli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(RunCli({"count", "lambda"}).code, kExitUsage);
  EXPECT_EQ(RunCli({"count", "trees", "3"}).code, kExitUsage);
  EXPECT_EQ(RunCli({"count", "bounded:", "3"}).code, kExitUsage);
  EXPECT_EQ(RunCli({"count", "lambda", "3", "--bogus"}).code, kExitUsage);
  EXPECT_EQ(RunCli({"gen", "lambda", "--min", "5", "--max", "4",
                    "--seed", "1"}).code,
            kExitUsage);
  EXPECT_EQ(RunCli({"gen", "motzkin", "--min", "5", "--max", "9", "--seed",
                    "1", "--typable"}).code,
            kExitUsage);
  const Result help = RunCli({"--help"});
  EXPECT_EQ(help.code, kExitOk);
  EXPECT_NE(help.out.find("gen"), std::string::npos);
}

TEST(Cli, GenIsDeterministicAndInWindow) {
  const std::vector<std::string> args = {"gen",   "lambda", "--min",  "50",
                                         "--max", "80",     "--count", "20",
                                         "--seed", "17"};
  const Result a = RunCli(args);
  const Result b = RunCli(args);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_TRUE(a.err.empty());
  const auto lines = Lines(a.out);
  ASSERT_EQ(lines.size(), 20u);
  for (const std::string& line : lines) {
    const std::uint64_t size = TermSize(ParseTerm(line));
    EXPECT_GE(size, 50u);
    EXPECT_LE(size, 80u);
  }
  // Line i depends only on seed + i.
  const Result shifted = RunCli({"gen", "lambda", "--min", "50", "--max", "80",
                                 "--count", "19", "--seed", "18"});
  EXPECT_EQ(Lines(shifted.out),
            std::vector<std::string>(lines.begin() + 1, lines.end()));
}

TEST(Cli, GenFilters) {
  const Result typed = RunCli({"gen", "lambda", "--min", "30", "--max", "40",
                               "--count", "10", "--seed", "3", "--typable"});
  ASSERT_EQ(typed.code, kExitOk) << typed.err;
  for (const std::string& line : Lines(typed.out)) {
    EXPECT_TRUE(IsTypable(ParseTerm(line))) << line;
  }
  const Result closed = RunCli({"gen", "lambda", "--min", "30", "--max", "40",
                                "--count", "10", "--seed", "3", "--close"});
  ASSERT_EQ(closed.code, kExitOk) << closed.err;
  for (const std::string& line : Lines(closed.out)) {
    const Term t = ParseTerm(line);
    EXPECT_EQ(FreeIndexExcess(t), 0u);
    EXPECT_GE(TermSize(t), 30u);
    EXPECT_LE(TermSize(t), 40u);
  }
  const Result bounded = RunCli({"gen", "bounded:1", "--min", "20", "--max",
                                 "25", "--count", "10", "--seed", "3"});
  ASSERT_EQ(bounded.code, kExitOk) << bounded.err;
  for (const std::string& line : Lines(bounded.out)) {
    EXPECT_LE(FreeIndexExcess(ParseTerm(line)), 1u);
  }
  const Result bits = RunCli({"gen", "lambda", "--min", "10", "--max", "10",
                              "--seed", "3", "--format", "tromp"});
  ASSERT_EQ(bits.code, kExitOk) << bits.err;
  EXPECT_EQ(bits.out.size(), 11u);
}

TEST(Cli, GenTrees) {
  const Result m = RunCli({"gen", "motzkin", "--min", "10", "--max", "12",
                           "--count", "5", "--seed", "1"});
  ASSERT_EQ(m.code, kExitOk) << m.err;
  EXPECT_EQ(Lines(m.out).size(), 5u);
  const Result b = RunCli({"gen", "binary", "--min", "10", "--max", "12",
                           "--count", "5", "--seed", "1"});
  ASSERT_EQ(b.code, kExitOk) << b.err;
  for (const std::string& line : Lines(b.out)) {
    EXPECT_EQ(line.front(), '(');
  }
}

TEST(Cli, GenAttemptsExhausted) {
  const Result r = RunCli({"gen", "binary", "--min", "2", "--max", "2",
                           "--seed", "1", "--max-attempts", "100"});
  EXPECT_EQ(r.code, kExitAttempts);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(RunCli({"gen", "closed", "--min", "5", "--max", "5", "--seed",
                    "1"}).code,
            kExitDomain);
}

TEST(Cli, GenWithoutSeedEchoesIt) {
  const Result r = RunCli({"gen", "lambda", "--min", "5", "--max", "9"});
  ASSERT_EQ(r.code, kExitOk);
  ASSERT_EQ(r.err.rfind("seed: ", 0), 0u);
  const std::string seed = r.err.substr(6, r.err.size() - 7);
  EXPECT_EQ(RunCli({"gen", "lambda", "--min", "5", "--max", "9", "--seed",
                    seed}).out,
            r.out);
}

TEST(Cli, Stats) {
  const Result r = RunCli({"stats", "lambda", "--x", "0.5093081270242373",
                           "--draws", "20000", "--seed", "5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("family lambda\n"), std::string::npos);
  EXPECT_NE(r.out.find("draws 20000\n"), std::string::npos);
  EXPECT_NE(r.out.find("kind abstraction "), std::string::npos);
  EXPECT_NE(r.out.find("histogram [2,4) "), std::string::npos);
  EXPECT_EQ(r.out, RunCli({"stats", "lambda", "--x", "0.5093081270242373",
                           "--draws", "20000", "--seed", "5"}).out);
  EXPECT_EQ(RunCli({"stats", "motzkin", "--x", "0.3", "--draws", "100",
                    "--seed", "1"}).code,
            kExitOk);
  EXPECT_EQ(RunCli({"stats", "binary", "--x", "0.7", "--draws", "100",
                    "--seed", "1"}).code,
            kExitDomain);
  EXPECT_EQ(RunCli({"stats", "closed", "--x", "0.3", "--draws", "100",
                    "--seed", "1"}).code,
            kExitUsage);
}

}  // namespace
}  // namespace lambdagen::cli
