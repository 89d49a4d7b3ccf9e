// Copyright 2026 The Hardy Bases Authors
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

#include "hardy/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "test_support.hpp"

using namespace hardy;
using namespace hardy::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

Json invoke_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const auto r = invoke(args);
  EXPECT_EQ(r.code, 0) << r.err;
  return Json::parse(r.out);
}

// Every finite number appearing in a JSON document.
void collect_numbers(const Json& j, std::multiset<double>& out) {
  if (j.is_number()) {
    out.insert(j.get<double>());
  } else if (j.is_structured()) {
    for (const auto& v : j) collect_numbers(v, out);
  }
}

std::set<double> numbers_in_text(const std::string& text) {
  static const std::regex number(R"((^|[^\w.+-])([+-]?\d+(\.\d+)?(e[+-]?\d+)?))");
  std::set<double> out;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), number); it != std::sregex_iterator(); ++it) {
    out.insert(std::stod((*it)[2].str()));
  }
  return out;
}

}  // namespace

TEST(Cli, RhoDiagonalMatchesFinalState) {
  const auto j = invoke_json({"rho", "--diagonal"});
  EXPECT_EQ(j["command"], "rho");
  const auto want = testkit::frozen_final_diagonal();
  const auto& diag = j["results"]["diagonal"];
  ASSERT_EQ(diag.size(), 16U);
  for (std::size_t i = 0; i < 16; ++i) EXPECT_NEAR(diag[i]["probability"].get<double>(), want[i], 1e-12);
  EXPECT_FALSE(j["results"].contains("real"));
}

TEST(Cli, RhoFullMatrix) {
  const auto j = invoke_json({"rho"});
  ASSERT_EQ(j["results"]["real"].size(), 16U);
  ASSERT_EQ(j["results"]["imag"][0].size(), 16U);
  EXPECT_GT(j["results"]["max_cross_sector_coherence"].get<double>(), 0.1);
  const auto csv = invoke({"rho", "--format", "csv"}).out;
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 257);
}

TEST(Cli, CoinModeSameDiagonalNoCrossCoherence) {
  const auto coherent = invoke_json({"rho", "--diagonal"});
  const auto coin = invoke_json({"rho", "--diagonal", "--mode", "coin"});
  for (std::size_t i = 0; i < 16; ++i) {
    EXPECT_NEAR(coherent["results"]["diagonal"][i]["probability"].get<double>(),
                coin["results"]["diagonal"][i]["probability"].get<double>(), 1e-12);
  }
  EXPECT_EQ(coin["results"]["max_cross_sector_coherence"].get<double>(), 0.0);
}

TEST(Cli, AlwaysZSupportsOnlyZChoices) {
  const auto j = invoke_json({"rho", "--diagonal", "--choice-prob", "1.0"});
  for (const auto& e : j["results"]["diagonal"]) {
    const std::string label = e["outcome"];
    if (label[2] == '-' || label[3] == '-') EXPECT_EQ(e["probability"].get<double>(), 0.0) << label;
  }
}

TEST(Cli, HardyDefault) {
  const auto r = invoke({"hardy"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("CONTRADICTION"), std::string::npos);
  const auto j = invoke_json({"hardy"});
  EXPECT_NEAR(j["results"]["f0"].get<double>(), 0.5, 1e-12);
  EXPECT_NEAR(j["results"]["f1"].get<double>(), 1.0, 1e-12);
  EXPECT_NEAR(j["results"]["f2"].get<double>(), 1.0, 1e-12);
  EXPECT_NEAR(j["results"]["f3"].get<double>(), 0.0, 1e-12);
  EXPECT_EQ(j["results"]["contradiction"], true);
}

TEST(Cli, HardyAlwaysZIsConsistentNotAnError) {
  const auto r = invoke({"hardy", "--choice-prob", "1.0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("CONSISTENT"), std::string::npos);
  const auto j = invoke_json({"hardy", "--choice-prob", "1.0"});
  EXPECT_EQ(j["results"]["established"][1], false);
}

TEST(Cli, HardyEmpirical) {
  const auto j = invoke_json({"hardy", "--samples", "1000000", "--seed", "7"});
  EXPECT_EQ(j["config"]["epsilon"].get<double>(), 0.01);
  EXPECT_EQ(j["results"]["source"]["kind"], "empirical");
  EXPECT_EQ(j["results"]["verdict"], "CONTRADICTION");
}

TEST(Cli, ExplicitEpsilonWinsInEmpiricalMode) {
  const auto j = invoke_json({"hardy", "--samples", "1000", "--epsilon", "0.2"});
  EXPECT_EQ(j["config"]["epsilon"].get<double>(), 0.2);
}

TEST(Cli, NoSignalDefault) {
  const auto j = invoke_json({"nosignal"});
  EXPECT_NEAR(j["results"]["delta_q3"].get<double>(), 0.5, 1e-12);
  EXPECT_NEAR(j["results"]["delta_q4"].get<double>(), 0.5, 1e-12);
  EXPECT_EQ(j["results"]["verdict"], "SIGNALING");
}

TEST(Cli, MissingSupportExitsThree) {
  EXPECT_EQ(invoke({"nosignal", "--choice-prob", "1"}).code, 3);
  EXPECT_EQ(invoke({"lhv", "--choice-prob", "0"}).code, 3);
  EXPECT_EQ(invoke({"predict", "--choice-prob", "1"}).code, 3);
}

TEST(Cli, ChshAngles) {
  const auto j = invoke_json({"chsh", "--angles", "0,1.5707963,-0.7853981,0.7853981"});
  EXPECT_NEAR(j["results"]["chsh"].get<double>(), 2.82842712, 1e-6);
  const auto d = invoke_json({"chsh"});
  EXPECT_NEAR(d["results"]["chsh"].get<double>(), 2.8284271247461903, 1e-9);
  EXPECT_EQ(invoke({"chsh", "--angles", "0,1"}).code, 2);
}

TEST(Cli, LhvReport) {
  const auto j = invoke_json({"lhv"});
  EXPECT_EQ(j["results"]["strategies"].size(), 16U);
  EXPECT_EQ(j["results"]["max_chsh"], 2);
  EXPECT_EQ(j["results"]["polytope"]["verdict"], "SIGNALING");
}

TEST(Cli, SampleReport) {
  const auto j = invoke_json({"sample", "--samples", "100000", "--seed", "9"});
  std::uint64_t total = 0;
  for (const auto& [k, v] : j["results"]["counts"].items()) total += v.get<std::uint64_t>();
  EXPECT_EQ(total, 100000U);
  EXPECT_LT(j["results"]["tv_distance"].get<double>(), 0.02);
}

TEST(Cli, PredictListsChainPredictions) {
  const auto j = invoke_json({"predict"});
  bool found = false;
  for (const auto& p : j["results"]["predictions"]) {
    if (p["given"] == "{q1=+1, q2=-1, q3=+1}" && p["predicted_variable"] == "q4" && p["predicted_value"] == -1) {
      found = true;
    }
  }
  EXPECT_TRUE(found);
  EXPECT_EQ(j["results"]["response_survivors"].size(), 2U);
}

TEST(Cli, ConfigErrorsExitTwo) {
  EXPECT_EQ(invoke({"sample", "--samples", "0"}).code, 2);
  EXPECT_EQ(invoke({"hardy", "--choice-prob", "1.5"}).code, 2);
  EXPECT_EQ(invoke({"hardy", "--epsilon", "0.5"}).code, 2);
  EXPECT_EQ(invoke({"hardy", "--mode", "dice"}).code, 2);
  EXPECT_EQ(invoke({"hardy", "--format", "xml"}).code, 2);
  EXPECT_EQ(invoke({"hardy", "--state", "ghz"}).code, 2);
  EXPECT_EQ(invoke({"bogus"}).code, 2);
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"hardy", "--no-such-flag"}).code, 2);
}

TEST(Cli, HelpExitsZero) {
  const auto r = invoke({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("hardy"), std::string::npos);
}

TEST(Cli, JsonRoundTripsByteForByte) {
  for (const std::string cmd : {"rho", "hardy", "nosignal", "chsh", "lhv", "sample", "predict"}) {
    std::vector<std::string> args{cmd, "--format", "json"};
    if (cmd == "sample") args.insert(args.end(), {"--samples", "5000"});
    const auto r = invoke(args);
    ASSERT_EQ(r.code, 0) << cmd;
    EXPECT_EQ(Json::parse(r.out).dump(2) + "\n", r.out) << cmd;
  }
}

TEST(Cli, IdenticalConfigGivesIdenticalBytes) {
  for (const std::string fmt : {"table", "json", "csv"}) {
    const std::vector<std::string> a{"sample", "--samples", "200000", "--seed", "5", "--format", fmt, "--threads", "1"};
    std::vector<std::string> b = a;
    b.back() = "4";
    EXPECT_EQ(invoke(a).out, invoke(b).out) << fmt;
    const std::vector<std::string> h{"hardy", "--samples", "50000", "--format", fmt};
    EXPECT_EQ(invoke(h).out, invoke(h).out) << fmt;
  }
}

TEST(Cli, TableAndJsonCarryTheSameNumbers) {
  for (const std::string cmd : {"hardy", "nosignal", "chsh", "sample"}) {
    std::vector<std::string> args{cmd};
    if (cmd == "sample") args.insert(args.end(), {"--samples", "5000"});
    const auto table = invoke(args);
    args.insert(args.end(), {"--format", "json"});
    const auto json = Json::parse(invoke(args).out);
    std::multiset<double> json_numbers;
    collect_numbers(json["results"], json_numbers);
    const auto table_numbers = numbers_in_text(table.out);
    for (double x : json_numbers) EXPECT_TRUE(table_numbers.count(x) > 0) << cmd << ": " << x;
  }
}

TEST(Cli, ConfigFileWithFlagOverride) {
  const auto path = std::filesystem::temp_directory_path() / "hardy_cli_test.conf";
  {
    std::ofstream f(path);
    f << "mode=coin\nchoice-prob=0.3\nseed=11\n";
  }
  auto j = invoke_json({"hardy", "--config", path.string()});
  EXPECT_EQ(j["config"]["mode"], "coin");
  EXPECT_EQ(j["config"]["choice_prob"].get<double>(), 0.3);
  j = invoke_json({"hardy", "--config", path.string(), "--choice-prob", "0.5"});
  EXPECT_EQ(j["config"]["choice_prob"].get<double>(), 0.5);
  EXPECT_EQ(j["config"]["seed"], 11);
  {
    std::ofstream f(path);
    f << "not-an-option=1\n";
  }
  EXPECT_EQ(invoke({"hardy", "--config", path.string()}).code, 2);
  std::filesystem::remove(path);
}

TEST(Cli, FormatNumberRoundTrips) {
  EXPECT_EQ(format_number(0.5), "0.5");
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(1e-9), "1e-09");
  const double x = 0.1 + 0.2;
  EXPECT_EQ(std::stod(format_number(x)), x);
}
