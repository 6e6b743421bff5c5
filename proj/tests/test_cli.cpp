/*
 *   Copyright 2026 The rml-rough Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "rml_cli.hpp"

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "rml");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = rml::cli::cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(RML_DATA_DIR) + "/" + name; }

}  // namespace

TEST(Cli, CheckPassesOnLukasiewicz3) {
  const CliRun r = run({"check", data("lukasiewicz3.rml")});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  for (const char* name : {"P1 ", "P9 ", "L1 ", "L6 ", "M1 ", "M14 ", "Cor-6-up", "soft-left-continuity"}) {
    EXPECT_NE(r.out.find(std::string("PASS  ") + name), std::string::npos) << name;
  }
  EXPECT_NE(r.out.find("result: PASS"), std::string::npos);
}

TEST(Cli, CheckFailsOnMissingResiduum) {
  const CliRun r = run({"check", data("m6-all-bottom.rml")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("{c, d}"), std::string::npos);
}

TEST(Cli, ClassifyNonSymmetric) {
  const CliRun r = run({"classify", data("nonsymmetric.rml")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("symmetric: false witness=(p,q)\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("reflexive: true\n"), std::string::npos);
}

TEST(Cli, VerifyCrispEqualityPasses) {
  const CliRun r = run({"verify", data("crisp-equality.rml")});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("PASS  equivalence:upper(lower f)=lower(lower f)"), std::string::npos);
}

TEST(Cli, VerifySampledEchoesSeed) {
  const CliRun r = run({"verify", data("nonsymmetric.rml"), "--mode", "sampled", "--samples", "100", "--seed", "42"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("seed=42"), std::string::npos);
  EXPECT_EQ(r.out, run({"verify", data("nonsymmetric.rml"), "--mode", "sampled", "--samples", "100", "--seed", "42"}).out);
}

TEST(Cli, VerifyFailureExitsOne) {
  EXPECT_EQ(run({"verify", data("pure7-space.rml")}).code, 1);
  EXPECT_EQ(run({"verify", data("tolerance-chain.rml")}).code, 1);
}

TEST(Cli, Approx) {
  const CliRun r = run({"approx", data("nonsymmetric.rml"), data("half.rml"), "--op", "both"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "fuzzyset lower:\n  p = 1/2\n  q = 0\nfuzzyset upper:\n  p = 1/2\n  q = 0\n");
  const CliRun lower = run({"approx", data("nonsymmetric.rml"), data("half.rml"), "--op", "lower"});
  EXPECT_EQ(lower.out, "fuzzyset lower:\n  p = 1/2\n  q = 0\n");
  const CliRun bad = run({"approx", data("pure7-space.rml"), data("pure7-ab.rml"), "--op", "upper"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("{c, d}"), std::string::npos);
}

TEST(Cli, Residuum) {
  const CliRun r = run({"residuum", data("lukasiewicz3.rml")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("  1/2 0 = 1/2\n"), std::string::npos);
  EXPECT_EQ(run({"residuum", data("m6-all-bottom.rml")}).code, 1);
}

TEST(Cli, EnumerateToStdoutAndDirectory) {
  const CliRun r = run({"enumerate", data("pure7.rml"), "--out", "-"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("count: 17\n"), std::string::npos);
  EXPECT_NE(run({"enumerate", data("pure7.rml"), "--canonical", "--out", "-"}).out.find("count: 6\n"),
            std::string::npos);
  EXPECT_NE(run({"enumerate", data("m6.rml"), "--out", "-"}).out.find("count: 0\n"), std::string::npos);

  const auto dir = std::filesystem::temp_directory_path() / "rml-cli-enumerate";
  std::filesystem::remove_all(dir);
  const CliRun d = run({"enumerate", data("goedel4.rml"), "--limit", "3", "--out", dir.string()});
  EXPECT_EQ(d.code, 0);
  EXPECT_TRUE(std::filesystem::exists(dir / "structure-0003.rml"));
  EXPECT_FALSE(std::filesystem::exists(dir / "structure-0004.rml"));
  std::filesystem::remove_all(dir);
}

TEST(Cli, EnumerateOracleCheck) {
  const CliRun r = run({"enumerate", data("diamond.rml"), "--oracle-check", "--out", "-"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("match"), std::string::npos);
  const CliRun refused = run({"enumerate", data("pure7.rml"), "--oracle-check", "--out", "-"});
  EXPECT_EQ(refused.code, 2);
  EXPECT_NE(refused.err.find("refuses"), std::string::npos);
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(run({"check", data("does-not-exist.rml")}).code, 2);
  EXPECT_EQ(run({"check", data("m6.rml")}).code, 2);  // no otimes section
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"approx", data("nonsymmetric.rml"), data("half.rml"), "--op", "sideways"}).code, 2);
  const auto tmp = std::filesystem::temp_directory_path() / "rml-cli-bad.rml";
  {
    std::ofstream(tmp) << "poset:\n  a<b b<a\n";
  }
  const CliRun r = run({"check", tmp.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 1: order relation has a cycle"), std::string::npos) << r.err;
  std::filesystem::remove(tmp);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, 0); }
