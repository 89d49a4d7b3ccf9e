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

#ifndef HARDY_CLI_HPP_
#define HARDY_CLI_HPP_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hardy/protocol.hpp"
#include "json.hpp"

namespace hardy::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitMissingSupport = 3;

enum class Format { Table, Json, Csv };
std::string_view name(Format f);

/// Epsilon and tol used when analysing a sampled distribution and the user
/// did not set them explicitly.
inline constexpr double kEmpiricalEpsilon = 0.01;
inline constexpr double kEmpiricalTol = 0.01;
inline constexpr std::uint64_t kDefaultSampleCount = 1'000'000;

struct RunConfig {
  std::string command;
  std::string state{protocol::kDefaultState};
  protocol::ChoiceMode mode = protocol::ChoiceMode::Coherent;
  double choice_prob = 0.5;
  std::uint64_t seed = 42;
  /// Empty means exact analysis (no sampling).
  std::optional<std::uint64_t> samples;
  double epsilon = 1e-9;
  double tol = 1e-9;
  Format format = Format::Table;
  bool diagonal = false;
  std::array<double, 4> angles{};
  /// Sampling threads; 0 = hardware concurrency. Never affects results.
  unsigned threads = 0;

  protocol::Scenario scenario() const;
  Json to_json() const;
};

/// Rendered output of one command in all three formats.
struct CommandOutput {
  Json results;
  std::string table;
  std::string csv;
};

// The commands. Each throws hardy::Error subclasses on invalid input;
// run() maps them to exit codes.
CommandOutput cmd_rho(const RunConfig& c);
CommandOutput cmd_hardy(const RunConfig& c);
CommandOutput cmd_nosignal(const RunConfig& c);
CommandOutput cmd_chsh(const RunConfig& c);
CommandOutput cmd_lhv(const RunConfig& c);
CommandOutput cmd_sample(const RunConfig& c);
CommandOutput cmd_predict(const RunConfig& c);

/// Shortest decimal that round-trips to the same double ("-0" prints as "0").
std::string format_number(double x);

/// Parses `args` (without the program name), runs the command and writes the
/// report to `out`. Diagnostics go to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hardy::cli

#endif  // HARDY_CLI_HPP_
