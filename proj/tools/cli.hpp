// Copyright 2026 The entpoly Authors
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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "entpoly/entropy.hpp"

namespace entpoly::cli {

/// Exit statuses.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kRuntime = 2,
  kViolation = 3,
};

constexpr std::uint64_t kDefaultSeed = 42;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown by parse_args for --help; carries the rendered help text.
struct HelpRequested : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CliConfig {
  std::string command;
  std::vector<std::string> specs;
  std::optional<std::string> base;
  std::string system;
  std::optional<std::uint64_t> samples;
  std::uint64_t seed = kDefaultSeed;
  double tol = 1e-9;
  std::string out;
  std::string format = "json";
  unsigned workers = 1;
  std::string state;
  std::string relation;
  std::string injector = "none";
  std::size_t max_witnesses = 16;
  double p = 3.0;
  int n = 3;
  std::vector<double> grid;
  std::string partition;
  std::vector<double> x;
  std::vector<double> y;
  std::vector<std::size_t> keep;
};

/// Parses argv (argv[0] is the program name). Throws UsageError or HelpRequested.
CliConfig parse_args(int argc, const char *const *argv);

/// The --spec strings with --base applied; "S" when none were given.
std::vector<EntropySpec> resolve_specs(const CliConfig &config);

/// Runs the command, writes the report to --out or `out`, and returns the exit status.
int run(const CliConfig &config, std::ostream &out, std::ostream &err);

/// parse_args + run with exit-status mapping.
int main_with_args(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace entpoly::cli
