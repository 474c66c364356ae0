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

#include "entpoly/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "entpoly/error.hpp"

namespace entpoly {
namespace {

using nlohmann::json;

double finite_or_throw(double v) {
  if (!std::isfinite(v)) throw InvalidArgument("cannot serialize a non-finite value");
  return v;
}

// Non-finite report values (e.g. an infinite slack placeholder) become null.
json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

std::vector<int> read_dims(const json &j) {
  if (!j.is_object() || !j.contains("dims") || !j.contains("re") || !j.contains("im")) {
    throw InvalidArgument("discrete state JSON needs 'dims', 're' and 'im'");
  }
  return j.at("dims").get<std::vector<int>>();
}

std::vector<std::complex<double>> read_entries(const json &j) {
  const auto re = j.at("re").get<std::vector<double>>();
  const auto im = j.at("im").get<std::vector<double>>();
  if (re.size() != im.size()) throw InvalidArgument("'re' and 'im' have different lengths");
  std::vector<std::complex<double>> out(re.size());
  for (std::size_t i = 0; i < re.size(); ++i) out[i] = {re[i], im[i]};
  return out;
}

}  // namespace

json to_json(const StateVector &psi) {
  json re = json::array();
  json im = json::array();
  for (Eigen::Index i = 0; i < psi.amplitudes().size(); ++i) {
    re.push_back(finite_or_throw(psi.amplitudes()(i).real()));
    im.push_back(finite_or_throw(psi.amplitudes()(i).imag()));
  }
  return json{{"dims", psi.layout().dims()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

json to_json(const DensityMatrix &rho) {
  json re = json::array();
  json im = json::array();
  const auto &m = rho.entries();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      re.push_back(finite_or_throw(m(r, c).real()));
      im.push_back(finite_or_throw(m(r, c).imag()));
    }
  }
  return json{{"dims", rho.layout().dims()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

json to_json(const CovarianceMatrix &sigma) {
  json rows = json::array();
  const auto &m = sigma.entries();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(finite_or_throw(m(r, c)));
    rows.push_back(std::move(row));
  }
  return json{{"n_modes", sigma.n_modes()}, {"rows", std::move(rows)}};
}

StateVector state_vector_from_json(const json &j) {
  DimsLayout layout(read_dims(j));
  const auto entries = read_entries(j);
  if (entries.size() != layout.total_dim()) {
    throw InvalidArgument("state vector JSON has " + std::to_string(entries.size()) +
                          " entries for dimension " + std::to_string(layout.total_dim()));
  }
  Eigen::VectorXcd v(static_cast<Eigen::Index>(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i) v(static_cast<Eigen::Index>(i)) = entries[i];
  // Stored vectors are normalized already; keep values untouched when they are.
  if (std::abs(v.norm() - 1.0) <= default_tolerances().normalization) {
    return StateVector(std::move(v), std::move(layout));
  }
  return build_state_vector(v, std::move(layout));
}

DensityMatrix density_matrix_from_json(const json &j) {
  DimsLayout layout(read_dims(j));
  const auto entries = read_entries(j);
  const std::size_t d = layout.total_dim();
  if (entries.size() != d * d) {
    throw InvalidArgument("density matrix JSON needs " + std::to_string(d * d) + " entries");
  }
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = entries[r * d + c];
    }
  }
  return DensityMatrix(std::move(m), std::move(layout));
}

CovarianceMatrix covariance_from_json(const json &j) {
  if (!j.is_object() || !j.contains("n_modes") || !j.contains("rows")) {
    throw InvalidArgument("covariance JSON needs 'n_modes' and 'rows'");
  }
  const int n = j.at("n_modes").get<int>();
  const auto rows = j.at("rows").get<std::vector<std::vector<double>>>();
  if (n < 1 || rows.size() != static_cast<std::size_t>(2 * n)) {
    throw InvalidArgument("covariance JSON: expected " + std::to_string(2 * n) + " rows");
  }
  Eigen::MatrixXd m(2 * n, 2 * n);
  for (int r = 0; r < 2 * n; ++r) {
    if (rows[static_cast<std::size_t>(r)].size() != static_cast<std::size_t>(2 * n)) {
      throw InvalidArgument("covariance JSON: row " + std::to_string(r) + " has the wrong length");
    }
    for (int c = 0; c < 2 * n; ++c) m(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  }
  // Exact symmetric input keeps its bits; CovarianceMatrix symmetrizes in place.
  return CovarianceMatrix(std::move(m));
}

AnyState state_from_json(const json &j) {
  if (j.is_object() && j.contains("n_modes")) return covariance_from_json(j);
  DimsLayout layout(read_dims(j));
  const std::size_t count = j.at("re").size();
  if (count == layout.total_dim()) return state_vector_from_json(j);
  if (count == layout.total_dim() * layout.total_dim()) return density_matrix_from_json(j);
  throw InvalidArgument("discrete state JSON: entry count matches neither a vector nor a matrix");
}

json read_json_file(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error &err) {
    throw InvalidArgument("malformed JSON in " + path.string() + ": " + err.what());
  }
}

void write_text_file(const std::filesystem::path &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
  if (!out) throw std::runtime_error("failed while writing " + path.string());
}

json to_json(const PolygonReport &r) {
  return json{{"slacks", r.slacks},
              {"min_slack", number_or_null(r.min_slack)},
              {"worst_party", r.worst_party},
              {"holds", r.holds},
              {"tolerance", r.tolerance}};
}

json to_json(const SubadditivityReport &r) {
  return json{{"E_AB", r.e_ab},
              {"E_A", r.e_a},
              {"E_B", r.e_b},
              {"mutual_information", r.mutual_information},
              {"holds", r.holds},
              {"tolerance", r.tolerance}};
}

json to_json(const OneToRestVector &v) {
  return json{{"values", v.values},
              {"spec", v.spec.to_string()},
              {"system", v.system == SystemKind::Discrete ? "discrete" : "gaussian"}};
}

json to_json(const WStateFindings &f) {
  json points = json::array();
  for (const auto &pt : f.points) {
    points.push_back(json{{"a1_squared", pt.a1_squared},
                          {"amplitudes", pt.amplitudes},
                          {"lambdas", pt.lambdas},
                          {"entropies", pt.entropies},
                          {"polygon", to_json(pt.polygon)}});
  }
  json out{{"p", f.p},
           {"n_qubits", f.n_qubits},
           {"points", std::move(points)},
           {"violations", f.violations},
           {"witness", nullptr}};
  if (f.witness) {
    const auto &pt = f.points[*f.witness];
    out["witness"] = json{{"a1_squared", pt.a1_squared},
                          {"min_slack", pt.polygon.min_slack},
                          {"state", to_json(w_class_state(pt.amplitudes))}};
  }
  return out;
}

json to_json(const EquivalenceReport &r) {
  return json{{"subadditivity", to_json(r.subadditivity)},
              {"polygon", to_json(r.polygon)},
              {"ancilla_slack", r.ancilla_slack},
              {"difference", r.difference},
              {"equivalent", r.equivalent}};
}

json to_json(const Theorem2Trace &t) {
  json parties = json::array();
  for (const auto &p : t.parties) {
    json links = json::array();
    for (const auto &l : p.links) {
      links.push_back(json{{"name", l.name}, {"lhs", l.lhs}, {"rhs", l.rhs}, {"slack", l.slack},
                           {"holds", l.holds}});
    }
    parties.push_back(json{{"excluded_party", p.party},
                           {"s", p.s},
                           {"d_prime", p.d_prime},
                           {"links", std::move(links)},
                           {"holds", p.holds}});
  }
  return json{{"spec", t.spec.to_string()},
              {"parties", std::move(parties)},
              {"min_slack", number_or_null(t.min_slack)},
              {"holds", t.holds}};
}

json to_json(const GhzDemoReport &r) {
  return json{{"spec", r.spec.to_string()},
              {"E_AB", r.e_ab},
              {"E_A", r.e_a},
              {"E_B", r.e_b},
              {"E_C", r.e_c},
              {"E_A|BC", r.e_a_given_bc},
              {"polygon_holds", r.polygon_holds},
              {"E_AB_positive", r.e_ab_positive},
              {"entanglement_of_AB", json{{"value", 0.0}, {"computed", false}, {"note", r.analytic_note}}}};
}

json to_json(const MonotonicityReport &r) {
  json pts = json::array();
  for (const auto &p : r.points) pts.push_back(json{{"x", p.x}, {"first", p.first}, {"second", p.second}});
  return json{{"points", std::move(pts)},
              {"nondecreasing", r.nondecreasing},
              {"concave", r.concave},
              {"convex_points", r.convex_points}};
}

std::string dump_sorted(const json &j) { return j.dump(2) + "\n"; }

}  // namespace entpoly
