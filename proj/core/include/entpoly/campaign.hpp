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

#ifndef ENTPOLY_CAMPAIGN_HPP
#define ENTPOLY_CAMPAIGN_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "entpoly/entropy.hpp"
#include "entpoly/tolerances.hpp"

namespace entpoly {

/// N qubits.
struct QubitSystem {
  int n = 3;
};

/// Parties with arbitrary local dimensions.
struct QuditSystem {
  std::vector<int> dims;
};

/// Gaussian parties with the given mode counts.
struct GaussianSystem {
  std::vector<int> partition;
  double z_max = 2.0;
  double s_max = 4.0;
};

using SystemSpec = std::variant<QubitSystem, QuditSystem, GaussianSystem>;

/// "qubits:3", "qudits:3,3,3", "gaussian:1,1,1", "gaussian:2,1,1:z=2:s=4".
SystemSpec parse_system(std::string_view text);
std::string to_string(const SystemSpec &system);

enum class Relation {
  /// One-to-rest polygon on random pure states.
  Polygon,
  /// Party 0 versus the rest on random mixed states.
  Subadditivity,
  /// Smallest-eigenvalue inequality on pure qubit states.
  QubitMarginal,
  /// Shifted symplectic-eigenvalue inequality on pure single-mode-party states.
  GaussianMarginal,
  /// Ascending partial sums of the diagonal-pair vector against the
  /// symplectic spectrum, on random mixed CMs.
  Majorization,
  /// Every link of the Gaussian polygon argument on random pure CMs.
  Theorem2,
};

Relation parse_relation(std::string_view text);
std::string to_string(Relation relation);

/// True for relations whose verdict depends on an entropy family.
bool relation_uses_entropy(Relation relation);

/// Deterministic states evaluated before the random samples.
enum class Injector {
  None,
  /// W-class states on the default a_1^2 grid (polygon on qubits).
  WClass,
  /// diag(0.5, 0.3, 0.2, 0) for subadditivity; its purification for polygon.
  RenyiCounterexample,
};

Injector parse_injector(std::string_view text);
std::string to_string(Injector injector);

struct CampaignConfig {
  SystemSpec system = QubitSystem{3};
  Relation relation = Relation::Polygon;
  std::vector<EntropySpec> specs;
  std::uint64_t samples = 1000;
  std::uint64_t seed = 42;
  /// A sample violates the relation when its slack is below -tolerance.
  double tolerance = 1e-9;
  unsigned workers = 1;
  Injector injector = Injector::None;
  /// Stored witnesses per spec; violations beyond this are only counted.
  std::size_t max_witnesses = 16;
};

struct Witness {
  /// Sample index, or -1 for injected states.
  std::int64_t sample = -1;
  std::uint64_t seed = 0;
  std::string origin;
  double slack = 0.0;
  nlohmann::json state;
};

struct SpecOutcome {
  /// Entropy spec string, or "none" for entropy-free relations.
  std::string spec;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  double worst_slack = 0.0;
  std::vector<Witness> witnesses;
};

struct CampaignReport {
  CampaignConfig config;
  std::vector<SpecOutcome> outcomes;

  std::uint64_t total_violations() const;
  bool holds() const { return total_violations() == 0; }
};

/// Throws InvalidArgument when the relation does not apply to the system.
void validate(const CampaignConfig &config);

/// Runs the configured relation over seeded random states. The report depends
/// only on the configuration (not on `workers`).
CampaignReport run_campaign(const CampaignConfig &config);

nlohmann::json to_json(const CampaignConfig &config);
nlohmann::json to_json(const CampaignReport &report);
/// Header "spec,checked,violations,worst_slack" and one row per spec.
std::string to_csv(const CampaignReport &report);

}  // namespace entpoly

#endif  // ENTPOLY_CAMPAIGN_HPP
