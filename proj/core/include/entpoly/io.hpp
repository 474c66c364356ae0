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

#ifndef ENTPOLY_IO_HPP
#define ENTPOLY_IO_HPP

#include <filesystem>
#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "entpoly/discrete.hpp"
#include "entpoly/entropy.hpp"
#include "entpoly/gaussian.hpp"
#include "entpoly/relations.hpp"

namespace entpoly {

// Discrete states: {"dims": [...], "re": [...], "im": [...]}. A vector carries
// total_dim entries, a matrix total_dim^2 entries in row-major order.
//
// Covariance matrices: {"n_modes": k, "rows": [[...], ...]} with quadratures
// ordered (q_1, p_1, ..., q_k, p_k).
//
// Finite doubles are written in shortest round-trip form, so reading back a
// written file reproduces every value bit for bit.

nlohmann::json to_json(const StateVector &psi);
nlohmann::json to_json(const DensityMatrix &rho);
nlohmann::json to_json(const CovarianceMatrix &sigma);

StateVector state_vector_from_json(const nlohmann::json &j);
DensityMatrix density_matrix_from_json(const nlohmann::json &j);
CovarianceMatrix covariance_from_json(const nlohmann::json &j);

using AnyState = std::variant<StateVector, DensityMatrix, CovarianceMatrix>;

/// Dispatches on the keys present ("n_modes" vs "dims") and, for discrete
/// states, on the number of entries.
AnyState state_from_json(const nlohmann::json &j);

nlohmann::json read_json_file(const std::filesystem::path &path);
/// Throws std::runtime_error if the file cannot be written.
void write_text_file(const std::filesystem::path &path, const std::string &content);

nlohmann::json to_json(const PolygonReport &r);
nlohmann::json to_json(const SubadditivityReport &r);
nlohmann::json to_json(const OneToRestVector &v);
nlohmann::json to_json(const WStateFindings &f);
nlohmann::json to_json(const EquivalenceReport &r);
nlohmann::json to_json(const Theorem2Trace &t);
nlohmann::json to_json(const GhzDemoReport &r);
nlohmann::json to_json(const MonotonicityReport &r);

/// Indented dump with sorted keys and a trailing newline.
std::string dump_sorted(const nlohmann::json &j);

}  // namespace entpoly

#endif  // ENTPOLY_IO_HPP
