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
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace entpoly {

/// One campaign run behind a matrix cell.
struct Table1Campaign {
  std::string system;
  std::string relation;
  std::string spec;
  std::string injector;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  double worst_slack = 0.0;
};

/// Expected and observed verdicts use "holds", "violated", "open" and "cited".
struct Table1Cell {
  std::string property;   // "subadditivity" or "polygon"
  std::string entropy;    // "S", "R" or "T"
  std::string system;     // "qubit", "qudit", "gaussian", "non-gaussian"
  std::string condition;  // e.g. "p<=2"; empty when the cell is uniform
  std::string expected;
  std::string observed;
  bool run = false;
  bool matches = false;
  std::vector<Table1Campaign> campaigns;
};

struct Table1Report {
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<Table1Cell> cells;

  bool all_match() const;
};

/// Runs every implemented cell with `samples` random states per campaign.
/// Non-Gaussian cells are not run: they report "cited", or "open" where the
/// answer is unknown.
Table1Report reproduce_table1(std::uint64_t samples, std::uint64_t seed, unsigned workers = 1);

nlohmann::json to_json(const Table1Report &report);
std::string to_csv(const Table1Report &report);
std::string render_text(const Table1Report &report);

}  // namespace entpoly
