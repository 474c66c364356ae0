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

#ifndef ENTPOLY_RELATIONS_HPP
#define ENTPOLY_RELATIONS_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "entpoly/discrete.hpp"
#include "entpoly/entropy.hpp"
#include "entpoly/gaussian.hpp"

namespace entpoly {

enum class SystemKind { Discrete, Gaussian };

/// E(rho_{A_i}) for every party of a pure multipartite state.
struct OneToRestVector {
  std::vector<double> values;
  EntropySpec spec;
  SystemKind system;
};

/// slack_i = sum_{j != i} x_j - x_i for every i.
struct PolygonReport {
  std::vector<double> slacks;
  double min_slack = 0.0;
  std::size_t worst_party = 0;
  bool holds = true;
  double tolerance = 0.0;
};

struct SubadditivityReport {
  double e_ab = 0.0;
  double e_a = 0.0;
  double e_b = 0.0;
  /// E_A + E_B - E_AB.
  double mutual_information = 0.0;
  bool holds = true;
  double tolerance = 0.0;
};

/// Raw polygon slacks of a value list (at least 2 entries).
PolygonReport polygon_slacks(std::span<const double> values, double tol);

/// Throws InvalidArgument for a mixed discrete input (tr rho^2 below 1 - tol).
OneToRestVector one_to_rest(const StateVector &psi, const EntropySpec &e);
OneToRestVector one_to_rest(const DensityMatrix &rho, const EntropySpec &e,
                            double purity_tol = default_tolerances().purity);
/// Throws InvalidArgument unless every symplectic eigenvalue is 1 within purity_tol.
OneToRestVector one_to_rest(const CovarianceMatrix &sigma, const ModePartition &partition,
                            const EntropySpec &e, double purity_tol = default_tolerances().purity);

PolygonReport polygon_check(const OneToRestVector &v, double tol = default_tolerances().violation);

/// Subadditivity across the cut (parties in `party_a`) | (the rest).
SubadditivityReport subadditivity_check(const DensityMatrix &rho, std::vector<std::size_t> party_a,
                                        const EntropySpec &e,
                                        double tol = default_tolerances().violation);
/// Subadditivity across party 0 | party 1 of a two-party mode partition.
SubadditivityReport subadditivity_check(const CovarianceMatrix &sigma, const ModePartition &partition,
                                        const EntropySpec &e,
                                        double tol = default_tolerances().violation);

double mutual_information(const DensityMatrix &rho, std::vector<std::size_t> party_a,
                          const EntropySpec &e);
double mutual_information(const CovarianceMatrix &sigma, const ModePartition &partition,
                          const EntropySpec &e);

/// lambda_i <= sum_{j != i} lambda_j over the smallest marginal eigenvalues of
/// a pure N-qubit state.
PolygonReport qubit_marginal_check(std::span<const double> lambdas,
                                   double tol = default_tolerances().violation);

/// (s_i - 1) <= sum_{j != i} (s_j - 1) over single-mode marginals of a pure
/// Gaussian state. Slacks are on the shifted values s - 1.
PolygonReport gaussian_marginal_check(std::span<const double> s,
                                      double tol = default_tolerances().violation);

/// min_k (sum_{i<=k} x_(i) - sum_{i<=k} y_(i)) with x_(i), y_(i) ascending.
double weak_majorization_slack(std::span<const double> x, std::span<const double> y);

/// x is weakly majorized by y in the ascending convention: every ascending
/// partial sum of x dominates the matching partial sum of y.
bool weak_majorization(std::span<const double> x, std::span<const double> y, double tol = 0.0);

/// f(x_i) <= sum_{j != i} f(x_j) for all i. The premise x_i <= sum_{j != i} x_j
/// is checked first and InvalidArgument is thrown when it fails.
bool lemma1_check(const std::function<double(double)> &f, std::span<const double> xs,
                  double tol = default_tolerances().violation);

struct WStatePoint {
  double a1_squared = 0.0;
  std::vector<double> amplitudes;
  std::vector<double> lambdas;
  std::vector<double> entropies;
  PolygonReport polygon;
};

struct WStateFindings {
  double p = 0.0;
  int n_qubits = 0;
  std::vector<WStatePoint> points;
  /// Indices into points with min slack below -witness tolerance.
  std::vector<std::size_t> violations;
  /// Most negative point, if any violation was found.
  std::optional<std::size_t> witness;
};

/// Default a_1^2 grid: 0.5, 0.6, 0.7, 0.8, 0.9, 0.98.
std::vector<double> default_wclass_grid();

/// Evaluates the Renyi-p polygon on W-class states with the given a_1^2 and the
/// remaining weight split evenly over N - 1 qubits. Requires p > 2.
WStateFindings wstate_violation(double p, int n_qubits, const std::vector<double> &a1sq_grid,
                                double log_base = 2.0,
                                double witness_tol = default_tolerances().witness);

/// Nondecreasing concave map with f(0) = 0, applied to one-to-rest values.
struct MonotoneTransform {
  std::string name;
  std::function<double(double)> fn;
};

MonotoneTransform identity_transform();
MonotoneTransform sqrt_transform();
/// x -> (b^{(1-q) x} - 1) / (1 - q): Renyi-q values to Tsallis-q values.
MonotoneTransform tsallis_from_renyi_transform(double q, double log_base);

/// Spot-checks f(0) = 0, monotonicity and concavity on a grid over [0, upper];
/// returns false if any check fails.
bool spot_check_monotone(const MonotoneTransform &f, double upper, int points = 257);

/// Polygon check on f(values). Throws InvalidArgument if f fails the spot check.
PolygonReport transform_polygon(const OneToRestVector &v, const MonotoneTransform &f,
                                double tol = default_tolerances().violation);

struct EquivalenceReport {
  SubadditivityReport subadditivity;
  PolygonReport polygon;
  /// Polygon slack at the purifying party C; equals the mutual information.
  double ancilla_slack = 0.0;
  double difference = 0.0;
  bool equivalent = false;
};

/// Purifies a bipartite rho_AB to |psi>_ABC and compares the polygon slack at C
/// with the subadditivity slack of rho_AB.
EquivalenceReport purified_equivalence_demo(const DensityMatrix &rho_ab, const EntropySpec &e,
                                            double match_tol = 1e-9);
/// Gaussian counterpart on a two-party mode partition.
EquivalenceReport purified_equivalence_demo(const CovarianceMatrix &sigma_ab,
                                            const ModePartition &partition, const EntropySpec &e,
                                            double match_tol = 1e-9);

struct ProofLink {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  /// rhs - lhs for inequalities lhs <= rhs; -|rhs - lhs| for equalities.
  double slack = 0.0;
  bool holds = true;
};

struct ExcludedPartyTrace {
  std::size_t party = 0;
  /// Symplectic spectrum of the state of all other parties (ascending).
  std::vector<double> s;
  /// Local symplectic eigenvalues of the other parties after the local normal form.
  std::vector<double> d_prime;
  std::vector<ProofLink> links;
  bool holds = true;
};

struct Theorem2Trace {
  EntropySpec spec;
  std::vector<ExcludedPartyTrace> parties;
  double min_slack = 0.0;
  bool holds = true;
};

/// Numerically replays every step of the Gaussian polygon argument for each
/// excluded party of a pure multipartite CM.
Theorem2Trace theorem2_proof_trace(const CovarianceMatrix &sigma, const ModePartition &partition,
                                   const EntropySpec &e, double tol = 1e-8);

struct GhzDemoReport {
  EntropySpec spec;
  double e_ab = 0.0;
  double e_a = 0.0;
  double e_b = 0.0;
  double e_c = 0.0;
  /// E(rho_{A|BC}) = E(rho_A) for the pure GHZ state.
  double e_a_given_bc = 0.0;
  bool polygon_holds = false;
  bool e_ab_positive = false;
  std::string analytic_note;
};

/// Entropy side of the monogamy-versus-polygon chain on the three-qubit GHZ state.
GhzDemoReport ghz_monogamy_demo(const EntropySpec &e);

/// c_0 = E(A_1..A_{N-1}), c_k = E(A_1..A_{N-1-k}) + sum of the last k single-party
/// entropies among A_1..A_{N-1}; c_{N-2} = sum_{i<N} E(A_i). Consecutive values are
/// nondecreasing whenever E is subadditive on the reduced states.
std::vector<double> subadditivity_chain(const StateVector &psi, const EntropySpec &e);

/// The diagonal two-qubit state diag(0.5, 0.3, 0.2, 0) placed on the first two
/// levels of party 0 and of the remaining parties of `layout`.
DensityMatrix renyi_counterexample_state(const DimsLayout &layout);

}  // namespace entpoly

#endif  // ENTPOLY_RELATIONS_HPP
