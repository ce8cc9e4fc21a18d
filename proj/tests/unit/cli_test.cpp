// Copyright 2026 The primegap Authors
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

#include <cmath>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "commands.hpp"
#include "oracles.hpp"
#include "primegap/checkpoint.hpp"
#include "run_config.hpp"

namespace primegap::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "primegap");
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream cell_in(line);
    std::string cell;
    while (std::getline(cell_in, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("primegap_cli_" + std::to_string(::getpid()) + "_" + name);
}

TEST(ParseLimitTest, Forms) {
  EXPECT_EQ(parse_limit("426000000"), 426'000'000u);
  EXPECT_EQ(parse_limit("426_000_000"), 426'000'000u);
  EXPECT_EQ(parse_limit("4.26e8"), 426'000'000u);
  EXPECT_EQ(parse_limit("1e6"), 1'000'000u);
  EXPECT_EQ(parse_limit("1E+2"), 100u);
  EXPECT_EQ(parse_limit("2.50e1"), 25u);
  EXPECT_EQ(parse_limit("9223372036854775808"), std::uint64_t{1} << 63);
  EXPECT_THROW(parse_limit(""), UsageError);
  EXPECT_THROW(parse_limit("1.5"), UsageError);
  EXPECT_THROW(parse_limit("4.261e2"), UsageError);
  EXPECT_THROW(parse_limit("abc"), UsageError);
  EXPECT_THROW(parse_limit("-5"), UsageError);
  EXPECT_THROW(parse_limit("1e"), UsageError);
  EXPECT_THROW(parse_limit("99999999999999999999"), UsageError);
}

TEST(AndricaCommandTest, MillionPasses) {
  const Outcome r = invoke({"andrica", "--limit", "1000000"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  const auto rows = csv(r.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"verified_below", "violations", "witness_n", "witness_p", "witness_q",
                                                "max_value"}));
  EXPECT_EQ(rows[1][1], "0");
  EXPECT_EQ(rows[1][3], "7");
  EXPECT_EQ(rows[1][4], "11");
}

TEST(AndricaCommandTest, UsageErrors) {
  EXPECT_EQ(invoke({"andrica", "--limit", "2"}).code, kExitUsage);
  EXPECT_EQ(invoke({"andrica"}).code, kExitUsage);
  EXPECT_EQ(invoke({"andrica", "--limit", "1.5"}).code, kExitUsage);
  EXPECT_EQ(invoke({"andrica", "--limit", "1000", "--threads", "0"}).code, kExitUsage);
  EXPECT_EQ(invoke({"andrica", "--limit", "1000", "--segment-span", "1000"}).code, kExitUsage);
  EXPECT_EQ(invoke({"andrica", "--limit", "1000", "--resume"}).code, kExitUsage);
  EXPECT_EQ(invoke({"bogus"}).code, kExitUsage);
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}

TEST(AndricaCommandTest, CheckpointResumeMatchesFreshRun) {
  const auto path = temp_path("andrica.json");
  ASSERT_EQ(invoke({"andrica", "--limit", "300000", "--checkpoint", path.string()}).code, kExitOk);
  const Outcome resumed =
      invoke({"andrica", "--limit", "2e6", "--checkpoint", path.string(), "--resume", "--checkpoint-every", "100000"});
  const Outcome fresh = invoke({"andrica", "--limit", "2e6"});
  EXPECT_EQ(resumed.code, kExitOk) << resumed.err;
  EXPECT_EQ(resumed.out, fresh.out);
  EXPECT_EQ(read_checkpoint(path).verified_below(), 2'000'000u);
  // resuming below the checkpoint's bound is a mismatch
  EXPECT_EQ(invoke({"andrica", "--limit", "1e6", "--checkpoint", path.string(), "--resume"}).code, kExitUsage);
  // a records checkpoint cannot resume andrica
  EXPECT_EQ(invoke({"records", "--limit", "3e6", "--checkpoint", path.string(), "--resume"}).code, kExitUsage);
  std::filesystem::remove(path);
  EXPECT_EQ(invoke({"andrica", "--limit", "1e6", "--checkpoint", path.string(), "--resume"}).code, kExitUsage);
}

TEST(RecordsCommandTest, Examples) {
  const Outcome sandor = invoke({"records", "--alpha", "0.5", "--beta", "0.25", "--limit", "100"});
  ASSERT_EQ(sandor.code, kExitOk) << sandor.err;
  const auto rows = csv(sandor.out);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"n", "p", "q", "gap", "value"}));
  EXPECT_EQ(rows[1][0], "1");
  EXPECT_EQ(rows[1][1], "2");
  EXPECT_EQ(rows[1][2], "3");

  const Outcome zero = invoke({"records", "--alpha", "0", "--beta", "0.5", "--limit", "100"});
  const auto zrows = csv(zero.out);
  ASSERT_EQ(zrows.size(), 2u);
  EXPECT_EQ(zrows[1][4], "0");

  const Outcome max = invoke({"records", "--alpha", "0.5", "--beta", "0.25", "--limit", "1e5", "--kind", "max"});
  const auto mrows = csv(max.out);
  ASSERT_GE(mrows.size(), 3u);
  for (std::size_t i = 2; i < mrows.size(); ++i) EXPECT_GT(std::stod(mrows[i][4]), std::stod(mrows[i - 1][4]));
}

TEST(RecordsCommandTest, HypothesisViolationIsUsageError) {
  const Outcome r = invoke({"records", "--alpha", "0.5", "--beta", "0.5", "--limit", "100"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("alpha + beta must be < 1"), std::string::npos);
  EXPECT_EQ(invoke({"records", "--alpha", "-0.1", "--beta", "0.5", "--limit", "100"}).code, kExitUsage);
  EXPECT_EQ(invoke({"records", "--limit", "100", "--kind", "median"}).code, kExitUsage);
}

TEST(RecordsCommandTest, RowsRecomputeFromPairs) {
  const Outcome r = invoke({"records", "--alpha", "0.3", "--beta", "0.6", "--limit", "1e6"});
  const auto rows = csv(r.out);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const std::uint64_t p = std::stoull(rows[i][1]);
    const std::uint64_t q = std::stoull(rows[i][2]);
    EXPECT_EQ(std::stoull(rows[i][3]), q - p);
    EXPECT_LE(oracle::relative_error(std::stod(rows[i][4]), oracle::functional_hp(0.3, 0.6, p, q)), 1e-12);
  }
}

TEST(RecordsCommandTest, CheckpointResume) {
  const auto path = temp_path("records.json");
  const std::vector<std::string> base = {"records", "--alpha", "0.5", "--beta", "0.25", "--checkpoint-every", "65536"};
  auto with = [&](std::vector<std::string> extra) {
    auto args = base;
    args.insert(args.end(), extra.begin(), extra.end());
    return invoke(args);
  };
  ASSERT_EQ(with({"--limit", "123457", "--checkpoint", path.string()}).code, kExitOk);
  const Outcome resumed = with({"--limit", "3e6", "--checkpoint", path.string(), "--resume"});
  const Outcome fresh = with({"--limit", "3e6"});
  EXPECT_EQ(resumed.code, kExitOk) << resumed.err;
  EXPECT_EQ(resumed.out, fresh.out);

  const Outcome mismatch = invoke(
      {"records", "--alpha", "0.4", "--beta", "0.25", "--limit", "4e6", "--checkpoint", path.string(), "--resume"});
  EXPECT_EQ(mismatch.code, kExitUsage);
  EXPECT_NE(mismatch.err.find("checkpoint"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(SmarandacheCommandTest, Examples) {
  const auto million = csv(invoke({"smarandache", "--limit", "1e6"}).out);
  ASSERT_EQ(million.size(), 2u);
  EXPECT_EQ(million[0], (std::vector<std::string>{"min_gamma", "witness_p", "witness_q", "residual"}));
  EXPECT_NEAR(std::stod(million[1][0]), 0.5671481302539, 1e-10);
  EXPECT_EQ(million[1][1], "113");
  EXPECT_EQ(million[1][2], "127");
  EXPECT_LE(std::abs(std::stod(million[1][3])), 1e-12);

  const auto five = csv(invoke({"smarandache", "--limit", "5"}).out);
  EXPECT_NEAR(std::stod(five[1][0]), 1.0, 1e-12);
  EXPECT_EQ(five[1][1], "2");
  EXPECT_EQ(five[1][2], "3");

  const auto tenk = csv(invoke({"smarandache", "--limit", "10000"}).out);
  EXPECT_EQ(tenk[1], million[1]);
}

TEST(AlphaCurveCommandTest, RowsAndConsistency) {
  const Outcome r = invoke({"alpha-curve", "--c", "0.5,1,2", "--limit", "100000"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = csv(r.out);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"C", "alpha", "witness_p", "witness_q", "residual"}));
  EXPECT_EQ(rows[1][0], "0.5");
  EXPECT_EQ(rows[2][0], "1");
  EXPECT_EQ(rows[3][0], "2");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double c = std::stod(rows[i][0]);
    const double g = std::stod(rows[i][1]);
    const long double lhs = powl(std::stold(rows[i][3]), g) - powl(std::stold(rows[i][2]), g) - c;
    EXPECT_LE(std::abs(static_cast<double>(lhs)), 1e-12 * std::max(1.0, c));
  }

  const auto one = csv(invoke({"alpha-curve", "--c", "1", "--limit", "1000000"}).out);
  const auto sm = csv(invoke({"smarandache", "--limit", "1000000"}).out);
  EXPECT_EQ(one[1][1], sm[1][0]);
  EXPECT_EQ(one[1][2], sm[1][1]);
  EXPECT_EQ(one[1][3], sm[1][2]);
  EXPECT_EQ(one[1][4], sm[1][3]);
}

TEST(AlphaCurveCommandTest, Errors) {
  EXPECT_EQ(invoke({"alpha-curve", "--limit", "1000"}).code, kExitUsage);
  EXPECT_EQ(invoke({"alpha-curve", "--c", "0", "--limit", "1000"}).code, kExitUsage);
  const Outcome overflow = invoke({"alpha-curve", "--c", "1e300", "--limit", "1000"});
  EXPECT_EQ(overflow.code, kExitFailure);
  EXPECT_NE(overflow.err.find("p=2 q=3"), std::string::npos);
}

TEST(GapstatsCommandTest, Examples) {
  const auto cramer = csv(invoke({"gapstats", "--limit", "1000", "--kind", "cramer"}).out);
  ASSERT_GE(cramer.size(), 2u);
  EXPECT_EQ(cramer[0], (std::vector<std::string>{"kind", "n", "p", "q", "gap", "ratio"}));
  const auto& last = cramer.back();
  const double lp = std::log(std::stod(last[2]));
  EXPECT_NEAR(std::stod(last[5]), std::stod(last[4]) / (lp * lp), 1e-15);

  const auto conj1 = csv(invoke({"gapstats", "--limit", "1000", "--kind", "conj1", "--alpha", "0.5"}).out);
  EXPECT_EQ(conj1.back()[2], "7");
  EXPECT_EQ(conj1.back()[3], "11");

  const auto all = csv(invoke({"gapstats", "--limit", "1000"}).out);
  std::size_t kinds[3] = {0, 0, 0};
  for (std::size_t i = 1; i < all.size(); ++i) {
    kinds[0] += all[i][0] == "cramer";
    kinds[1] += all[i][0] == "bhp";
    kinds[2] += all[i][0] == "conj1";
  }
  EXPECT_GT(kinds[0], 0u);
  EXPECT_GT(kinds[1], 0u);
  EXPECT_GT(kinds[2], 0u);
  EXPECT_EQ(invoke({"gapstats", "--limit", "1000", "--alpha", "1"}).code, kExitUsage);
}

TEST(OutputTest, JsonMirrorsCsv) {
  const Outcome j = invoke({"records", "--alpha", "0.5", "--beta", "0.25", "--limit", "1e4", "--format", "json"});
  const Outcome c = invoke({"records", "--alpha", "0.5", "--beta", "0.25", "--limit", "1e4"});
  const auto doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc["meta"]["command"], "records");
  EXPECT_EQ(doc["meta"]["limit"], 10000);
  EXPECT_EQ(doc["meta"]["alpha"], 0.5);
  EXPECT_EQ(doc["meta"]["beta"], 0.25);
  EXPECT_EQ(doc["meta"]["schema_version"], 1);
  const auto rows = csv(c.out);
  ASSERT_EQ(doc["rows"].size() + 1, rows.size());
  for (std::size_t i = 0; i < doc["rows"].size(); ++i) {
    EXPECT_EQ(doc["rows"][i]["p"].get<std::uint64_t>(), std::stoull(rows[i + 1][1]));
    EXPECT_EQ(doc["rows"][i]["value"].get<double>(), std::stod(rows[i + 1][4]));
  }
}

TEST(OutputTest, DeterministicAcrossRunsAndThreads) {
  for (const std::vector<std::string>& cmd :
       {std::vector<std::string>{"andrica", "--limit", "3e6"},
        std::vector<std::string>{"records", "--alpha", "0.5", "--beta", "0.49", "--limit", "3e6", "--kind", "max"},
        std::vector<std::string>{"smarandache", "--limit", "3e6"},
        std::vector<std::string>{"alpha-curve", "--c", "0.25,3", "--limit", "3e6"},
        std::vector<std::string>{"gapstats", "--limit", "3e6", "--format", "json"}}) {
    const Outcome once = invoke(cmd);
    EXPECT_EQ(invoke(cmd).out, once.out);
    auto threaded = cmd;
    threaded.insert(threaded.end(), {"--threads", "4", "--segment-span", "65536"});
    EXPECT_EQ(invoke(threaded).out, once.out) << cmd[0];
  }
}

}  // namespace
}  // namespace primegap::cli
