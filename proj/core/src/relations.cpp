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

#include "entpoly/relations.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "entpoly/error.hpp"

namespace entpoly {
namespace {

std::vector<double> ascending(std::span<const double> v) {
  std::vector<double> out(v.begin(), v.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> complement(std::vector<std::size_t> chosen, std::size_t parties) {
  std::sort(chosen.begin(), chosen.end());
  std::vector<std::size_t> rest;
  for (std::size_t p = 0; p < parties; ++p) {
    if (!std::binary_search(chosen.begin(), chosen.end(), p)) rest.push_back(p);
  }
  return rest;
}

ProofLink inequality(std::string name, double lhs, double rhs, double tol) {
  const double slack = rhs - lhs;
  return ProofLink{std::move(name), lhs, rhs, slack, slack >= -tol};
}

ProofLink equality(std::string name, double lhs, double rhs, double tol) {
  const double slack = -std::abs(rhs - lhs);
  return ProofLink{std::move(name), lhs, rhs, slack, slack >= -tol};
}

double log_g_product(std::span<const double> s, double q) {
  double acc = 0.0;
  for (double v : s) acc += std::log(g_factor(v, q));
  return acc;
}

}  // namespace

PolygonReport polygon_slacks(std::span<const double> values, double tol) {
  if (values.size() < 2) throw InvalidArgument("polygon check needs at least 2 parties");
  PolygonReport report;
  report.tolerance = tol;
  report.slacks.reserve(values.size());
  report.min_slack = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < values.size(); ++i) {
    double others = 0.0;
    for (std::size_t j = 0; j < values.size(); ++j) {
      if (j != i) others += values[j];
    }
    const double slack = others - values[i];
    report.slacks.push_back(slack);
    if (slack < report.min_slack) {
      report.min_slack = slack;
      report.worst_party = i;
    }
  }
  report.holds = report.min_slack >= -tol;
  return report;
}

OneToRestVector one_to_rest(const StateVector &psi, const EntropySpec &e) {
  const std::size_t n = psi.layout().num_parties();
  if (n < 2) throw InvalidArgument("one_to_rest: need at least 2 parties");
  OneToRestVector out{{}, e, SystemKind::Discrete};
  out.values.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.values.push_back(entropy_of_state(partial_trace(psi, {i}), e));
  }
  return out;
}

OneToRestVector one_to_rest(const DensityMatrix &rho, const EntropySpec &e, double purity_tol) {
  const double purity = (rho.entries() * rho.entries()).trace().real();
  if (purity < 1.0 - purity_tol) {
    throw InvalidArgument("one_to_rest: the global state is mixed (purity " +
                          std::to_string(purity) + "); one-to-rest values need a pure state");
  }
  const std::size_t n = rho.layout().num_parties();
  if (n < 2) throw InvalidArgument("one_to_rest: need at least 2 parties");
  OneToRestVector out{{}, e, SystemKind::Discrete};
  for (std::size_t i = 0; i < n; ++i) {
    out.values.push_back(entropy_of_state(partial_trace(rho, {i}), e));
  }
  return out;
}

OneToRestVector one_to_rest(const CovarianceMatrix &sigma, const ModePartition &partition,
                            const EntropySpec &e, double purity_tol) {
  if (partition.total_modes() != sigma.n_modes()) {
    throw InvalidArgument("one_to_rest: partition does not match the number of modes");
  }
  if (partition.num_parties() < 2) throw InvalidArgument("one_to_rest: need at least 2 parties");
  for (double s : symplectic_spectrum(sigma).values) {
    if (std::abs(s - 1.0) > purity_tol) {
      throw InvalidArgument("one_to_rest: the global Gaussian state is mixed (symplectic eigenvalue " +
                            std::to_string(s) + ")");
    }
  }
  OneToRestVector out{{}, e, SystemKind::Gaussian};
  for (std::size_t i = 0; i < partition.num_parties(); ++i) {
    out.values.push_back(entropy_of_state(marginal_cm(sigma, partition, {i}), e));
  }
  return out;
}

PolygonReport polygon_check(const OneToRestVector &v, double tol) {
  for (double x : v.values) {
    if (x < -default_tolerances().validation) {
      throw InvalidArgument("polygon_check: negative one-to-rest value");
    }
  }
  return polygon_slacks(v.values, tol);
}

SubadditivityReport subadditivity_check(const DensityMatrix &rho, std::vector<std::size_t> party_a,
                                        const EntropySpec &e, double tol) {
  const std::size_t n = rho.layout().num_parties();
  if (n < 2) throw InvalidArgument("subadditivity_check: need a state with at least 2 parties");
  std::vector<std::size_t> party_b = complement(party_a, n);
  if (party_a.empty() || party_b.empty()) {
    throw InvalidArgument("subadditivity_check: both sides of the bipartition must be nonempty");
  }
  SubadditivityReport r;
  r.tolerance = tol;
  r.e_ab = entropy_of_state(rho, e);
  r.e_a = entropy_of_state(partial_trace(rho, std::move(party_a)), e);
  r.e_b = entropy_of_state(partial_trace(rho, std::move(party_b)), e);
  r.mutual_information = r.e_a + r.e_b - r.e_ab;
  r.holds = r.mutual_information >= -tol;
  return r;
}

SubadditivityReport subadditivity_check(const CovarianceMatrix &sigma, const ModePartition &partition,
                                        const EntropySpec &e, double tol) {
  if (partition.num_parties() != 2) {
    throw InvalidArgument("subadditivity_check: the mode partition must have exactly 2 parties");
  }
  if (partition.total_modes() != sigma.n_modes()) {
    throw InvalidArgument("subadditivity_check: partition does not match the number of modes");
  }
  SubadditivityReport r;
  r.tolerance = tol;
  r.e_ab = entropy_of_state(sigma, e);
  r.e_a = entropy_of_state(marginal_cm(sigma, partition, {0}), e);
  r.e_b = entropy_of_state(marginal_cm(sigma, partition, {1}), e);
  r.mutual_information = r.e_a + r.e_b - r.e_ab;
  r.holds = r.mutual_information >= -tol;
  return r;
}

double mutual_information(const DensityMatrix &rho, std::vector<std::size_t> party_a,
                          const EntropySpec &e) {
  return subadditivity_check(rho, std::move(party_a), e).mutual_information;
}

double mutual_information(const CovarianceMatrix &sigma, const ModePartition &partition,
                          const EntropySpec &e) {
  return subadditivity_check(sigma, partition, e).mutual_information;
}

PolygonReport qubit_marginal_check(std::span<const double> lambdas, double tol) {
  for (double l : lambdas) {
    if (!(l >= -1e-12 && l <= 0.5 + 1e-12)) {
      throw InvalidArgument("qubit_marginal_check: smallest eigenvalues must lie in [0, 1/2]");
    }
  }
  return polygon_slacks(lambdas, tol);
}

PolygonReport gaussian_marginal_check(std::span<const double> s, double tol) {
  std::vector<double> shifted;
  shifted.reserve(s.size());
  for (double v : s) {
    if (!(v >= 1.0 - default_tolerances().bona_fide)) {
      throw InvalidArgument("gaussian_marginal_check: symplectic eigenvalues must be >= 1");
    }
    shifted.push_back(v - 1.0);
  }
  return polygon_slacks(shifted, tol);
}

double weak_majorization_slack(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw InvalidArgument("weak_majorization: length mismatch");
  if (x.empty()) throw InvalidArgument("weak_majorization: empty vectors");
  const auto xs = ascending(x);
  const auto ys = ascending(y);
  double sx = 0.0;
  double sy = 0.0;
  double worst = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < xs.size(); ++k) {
    sx += xs[k];
    sy += ys[k];
    worst = std::min(worst, sx - sy);
  }
  return worst;
}

bool weak_majorization(std::span<const double> x, std::span<const double> y, double tol) {
  return weak_majorization_slack(x, y) >= -tol;
}

bool lemma1_check(const std::function<double(double)> &f, std::span<const double> xs, double tol) {
  for (double x : xs) {
    if (x < 0.0) throw InvalidArgument("lemma1_check: inputs must be nonnegative");
  }
  if (!polygon_slacks(xs, 1e-12).holds) {
    throw InvalidArgument("lemma1_check: inputs do not satisfy x_i <= sum_{j != i} x_j");
  }
  std::vector<double> fx;
  fx.reserve(xs.size());
  for (double x : xs) fx.push_back(f(x));
  return polygon_slacks(fx, tol).holds;
}

std::vector<double> default_wclass_grid() { return {0.5, 0.6, 0.7, 0.8, 0.9, 0.98}; }

WStateFindings wstate_violation(double p, int n_qubits, const std::vector<double> &a1sq_grid,
                                double log_base, double witness_tol) {
  if (!(p > 2.0)) {
    throw InvalidArgument("wstate_violation: p must exceed 2 (the Renyi polygon holds on qubits for p <= 2)");
  }
  if (n_qubits < 3) throw InvalidArgument("wstate_violation: need at least 3 qubits");
  const EntropySpec spec = EntropySpec::renyi(p, log_base);
  WStateFindings out;
  out.p = p;
  out.n_qubits = n_qubits;
  double best = std::numeric_limits<double>::infinity();
  for (double a1sq : a1sq_grid) {
    if (!(a1sq >= 0.5 && a1sq < 1.0)) {
      throw InvalidArgument("wstate_violation: a_1^2 must lie in [1/2, 1)");
    }
    WStatePoint pt;
    pt.a1_squared = a1sq;
    const double rest = (1.0 - a1sq) / (n_qubits - 1);
    pt.amplitudes.push_back(std::sqrt(a1sq));
    for (int k = 1; k < n_qubits; ++k) pt.amplitudes.push_back(std::sqrt(rest));
    // Renormalize so the squared amplitudes sum to 1 to within rounding.
    double norm2 = 0.0;
    for (double a : pt.amplitudes) norm2 += a * a;
    for (double &a : pt.amplitudes) a /= std::sqrt(norm2);
    const StateVector psi = w_class_state(pt.amplitudes);
    pt.lambdas = smallest_marginal_eigenvalues(psi);
    const OneToRestVector v = one_to_rest(psi, spec);
    pt.entropies = v.values;
    pt.polygon = polygon_check(v, witness_tol);
    if (pt.polygon.min_slack < -witness_tol) {
      out.violations.push_back(out.points.size());
      if (pt.polygon.min_slack < best) {
        best = pt.polygon.min_slack;
        out.witness = out.points.size();
      }
    }
    out.points.push_back(std::move(pt));
  }
  return out;
}

MonotoneTransform identity_transform() {
  return {"identity", [](double x) { return x; }};
}

MonotoneTransform sqrt_transform() {
  return {"sqrt", [](double x) { return std::sqrt(std::max(x, 0.0)); }};
}

MonotoneTransform tsallis_from_renyi_transform(double q, double log_base) {
  // Validates q > 1 eagerly.
  (void)tsallis_from_renyi(0.0, q, log_base);
  return {"tsallis_from_renyi:q=" + std::to_string(q),
          [q, log_base](double x) { return tsallis_from_renyi(x, q, log_base); }};
}

bool spot_check_monotone(const MonotoneTransform &f, double upper, int points) {
  if (points < 3 || !(upper > 0.0)) throw InvalidArgument("spot_check_monotone: bad grid");
  constexpr double kEps = 1e-12;
  if (std::abs(f.fn(0.0)) > kEps) return false;
  std::vector<double> values(static_cast<std::size_t>(points));
  for (int k = 0; k < points; ++k) values[static_cast<std::size_t>(k)] = f.fn(upper * k / (points - 1));
  for (std::size_t k = 1; k < values.size(); ++k) {
    const double scale = kEps * (1.0 + std::abs(values[k]));
    if (!std::isfinite(values[k]) || values[k] < values[k - 1] - scale) return false;
    if (k + 1 < values.size() && values[k + 1] - 2.0 * values[k] + values[k - 1] > scale) return false;
  }
  return true;
}

PolygonReport transform_polygon(const OneToRestVector &v, const MonotoneTransform &f, double tol) {
  const double upper = std::max(1.0, *std::max_element(v.values.begin(), v.values.end()));
  if (!spot_check_monotone(f, upper)) {
    throw InvalidArgument("transform_polygon: '" + f.name +
                          "' is not nondecreasing, concave and zero at 0 on the spot-check grid");
  }
  std::vector<double> mapped;
  mapped.reserve(v.values.size());
  for (double x : v.values) mapped.push_back(f.fn(x));
  return polygon_slacks(mapped, tol);
}

EquivalenceReport purified_equivalence_demo(const DensityMatrix &rho_ab, const EntropySpec &e,
                                            double match_tol) {
  if (rho_ab.layout().num_parties() != 2) {
    throw InvalidArgument("purified_equivalence_demo: rho_AB must have exactly 2 parties");
  }
  EquivalenceReport out;
  out.subadditivity = subadditivity_check(rho_ab, {0}, e);
  const StateVector psi = purify(rho_ab);
  out.polygon = polygon_check(one_to_rest(psi, e));
  out.ancilla_slack = out.polygon.slacks.at(2);
  out.difference = out.ancilla_slack - out.subadditivity.mutual_information;
  out.equivalent = std::abs(out.difference) <= match_tol;
  return out;
}

EquivalenceReport purified_equivalence_demo(const CovarianceMatrix &sigma_ab,
                                            const ModePartition &partition, const EntropySpec &e,
                                            double match_tol) {
  EquivalenceReport out;
  out.subadditivity = subadditivity_check(sigma_ab, partition, e);
  const CovarianceMatrix pure = gaussian_purify(sigma_ab);
  const ModePartition extended({partition.sizes()[0], partition.sizes()[1], sigma_ab.n_modes()});
  out.polygon = polygon_check(one_to_rest(pure, extended, e, 1e-6));
  out.ancilla_slack = out.polygon.slacks.at(2);
  out.difference = out.ancilla_slack - out.subadditivity.mutual_information;
  out.equivalent = std::abs(out.difference) <= match_tol;
  return out;
}

Theorem2Trace theorem2_proof_trace(const CovarianceMatrix &sigma, const ModePartition &partition,
                                   const EntropySpec &e, double tol) {
  if (partition.total_modes() != sigma.n_modes()) {
    throw InvalidArgument("theorem2_proof_trace: partition does not match the number of modes");
  }
  const std::size_t n = partition.num_parties();
  if (n < 2) throw InvalidArgument("theorem2_proof_trace: need at least 2 parties");
  for (double s : symplectic_spectrum(sigma).values) {
    if (std::abs(s - 1.0) > default_tolerances().purity) {
      throw InvalidArgument("theorem2_proof_trace: the global state must be pure");
    }
  }

  std::vector<double> local_entropy(n);
  std::vector<std::vector<double>> local_spectra(n);
  for (std::size_t i = 0; i < n; ++i) {
    const CovarianceMatrix marginal = marginal_cm(sigma, partition, {i});
    local_spectra[i] = symplectic_spectrum(marginal).values;
    local_entropy[i] = entropy_gaussian(SymplecticSpectrum{local_spectra[i]}, e);
  }

  Theorem2Trace trace{e, {}, std::numeric_limits<double>::infinity(), true};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::size_t> rest;
    std::vector<int> rest_sizes;
    for (std::size_t i = 0; i < n; ++i) {
      if (i != k) {
        rest.push_back(i);
        rest_sizes.push_back(partition.sizes()[i]);
      }
    }
    const ModePartition rest_partition(rest_sizes);
    const CovarianceMatrix sigma_rest = marginal_cm(sigma, partition, rest);

    ExcludedPartyTrace pt;
    pt.party = k;
    pt.s = symplectic_spectrum(sigma_rest).values;
    const LocalNormalForm lnf = local_normal_form(sigma_rest, rest_partition);
    pt.d_prime = lnf.d;

    const double maj = weak_majorization_slack(pt.d_prime, pt.s);
    pt.links.push_back(ProofLink{"weak_majorization", 0.0, maj, maj, maj >= -tol});

    const auto s_prime = symplectic_spectrum(lnf.sigma_prime).values;
    double invariance = 0.0;
    for (std::size_t j = 0; j < s_prime.size(); ++j) {
      invariance = std::max(invariance, std::abs(s_prime[j] - pt.s[j]));
    }
    pt.links.push_back(equality("local_symplectic_invariance", 0.0, invariance, tol));

    const double excluded = entropy_gaussian(SymplecticSpectrum{pt.s}, e);
    pt.links.push_back(equality("pure_marginal_identity", local_entropy[k], excluded, tol));

    double rest_sum = 0.0;
    for (std::size_t i : rest) rest_sum += local_entropy[i];

    if (e.family() == EntropyFamily::Tsallis) {
      const double q = e.order();
      const double h_s = std::exp(log_g_product(pt.s, q));
      const double h_d = std::exp(log_g_product(pt.d_prime, q));
      pt.links.push_back(inequality("renyi_ordering", h_d, h_s, tol));

      double per_party = 0.0;
      std::size_t offset = 0;
      for (std::size_t r = 0; r < rest.size(); ++r) {
        const std::size_t m = static_cast<std::size_t>(rest_sizes[r]);
        std::span<const double> chunk(pt.d_prime.data() + offset, m);
        per_party += -std::expm1(log_g_product(chunk, q)) / (q - 1.0);
        offset += m;
      }
      const double joint = (1.0 - h_d) / (q - 1.0);
      pt.links.push_back(inequality("product_inequality", joint, per_party, tol));
      pt.links.push_back(equality("local_decomposition", per_party, rest_sum, tol));
      pt.links.push_back(inequality("joint_bound", excluded, joint, tol));
    } else {
      double g_d = 0.0;
      for (double d : pt.d_prime) g_d += entropy_gaussian(SymplecticSpectrum{{d}}, e);
      pt.links.push_back(inequality("sum_inequality", excluded, g_d, tol));
      pt.links.push_back(equality("local_decomposition", g_d, rest_sum, tol));
    }
    pt.links.push_back(inequality("polygon", local_entropy[k], rest_sum, tol));

    for (const auto &link : pt.links) {
      pt.holds = pt.holds && link.holds;
      trace.min_slack = std::min(trace.min_slack, link.slack);
    }
    trace.holds = trace.holds && pt.holds;
    trace.parties.push_back(std::move(pt));
  }
  return trace;
}

GhzDemoReport ghz_monogamy_demo(const EntropySpec &e) {
  const StateVector ghz = ghz_state(3);
  GhzDemoReport r{e, 0.0, 0.0, 0.0, 0.0, 0.0, false, false, {}};
  r.e_ab = entropy_of_state(partial_trace(ghz, {0, 1}), e);
  r.e_a = entropy_of_state(partial_trace(ghz, {0}), e);
  r.e_b = entropy_of_state(partial_trace(ghz, {1}), e);
  r.e_c = entropy_of_state(partial_trace(ghz, {2}), e);
  r.e_a_given_bc = r.e_a;
  r.polygon_holds = r.e_a_given_bc <= r.e_b + r.e_c + default_tolerances().violation;
  r.e_ab_positive = r.e_ab > default_tolerances().violation;
  r.analytic_note =
      "rho_AB = rho_AC = rho_BC = (|00><00| + |11><11|)/2 is a mixture of product states, so any "
      "entanglement measure gives 0 on it while its entropy is positive";
  return r;
}

std::vector<double> subadditivity_chain(const StateVector &psi, const EntropySpec &e) {
  const std::size_t n = psi.layout().num_parties();
  if (n < 3) throw InvalidArgument("subadditivity_chain: need at least 3 parties");
  std::vector<double> singles(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) singles[i] = entropy_of_state(partial_trace(psi, {i}), e);
  std::vector<double> chain;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    // Joint block is parties 0 .. n-2-k; the last k of A_1..A_{N-1} are split off.
    const std::size_t block_end = n - 1 - k;
    std::vector<std::size_t> block(block_end);
    std::iota(block.begin(), block.end(), std::size_t{0});
    double value = entropy_of_state(partial_trace(psi, block), e);
    for (std::size_t j = block_end; j + 1 < n; ++j) value += singles[j];
    chain.push_back(value);
  }
  return chain;
}

DensityMatrix renyi_counterexample_state(const DimsLayout &layout) {
  if (layout.num_parties() < 2) {
    throw InvalidArgument("renyi_counterexample_state: need at least 2 parties");
  }
  const auto dim_a = static_cast<Eigen::Index>(layout.dim(0));
  const auto dim_b = static_cast<Eigen::Index>(layout.total_dim()) / dim_a;
  if (dim_a < 2 || dim_b < 2) {
    throw InvalidArgument("renyi_counterexample_state: both sides need dimension >= 2");
  }
  const auto d = static_cast<Eigen::Index>(layout.total_dim());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  const double weights[2][2] = {{0.5, 0.3}, {0.2, 0.0}};
  for (Eigen::Index i = 0; i < 2; ++i) {
    for (Eigen::Index j = 0; j < 2; ++j) m(i * dim_b + j, i * dim_b + j) = weights[i][j];
  }
  return DensityMatrix(std::move(m), layout);
}

}  // namespace entpoly
