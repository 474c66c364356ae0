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

#ifndef ENTPOLY_DISCRETE_HPP
#define ENTPOLY_DISCRETE_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "entpoly/rng.hpp"
#include "entpoly/tolerances.hpp"

namespace entpoly {

using Complex = std::complex<double>;

/// Tensor-factor layout of a finite-dimensional multipartite system.
///
/// Party 0 is the slowest-varying tensor index: basis state |i_0 i_1 ... i_{N-1}>
/// sits at linear index ((i_0 * d_1 + i_1) * d_2 + ...). Every routine that
/// splits or reorders parties uses this convention.
class DimsLayout {
 public:
  /// Throws InvalidArgument on an empty list or a zero/negative entry. Entries
  /// of 1 are accepted only to carry a trivial purification ancilla.
  explicit DimsLayout(std::vector<int> dims);

  const std::vector<int> &dims() const { return dims_; }
  std::size_t num_parties() const { return dims_.size(); }
  int dim(std::size_t party) const { return dims_.at(party); }
  std::size_t total_dim() const { return total_; }

  /// Layout restricted to `parties` (ascending order).
  DimsLayout subset(std::span<const std::size_t> parties) const;

  bool operator==(const DimsLayout &other) const { return dims_ == other.dims_; }

 private:
  std::vector<int> dims_;
  std::size_t total_ = 1;
};

/// Normalized pure state.
class StateVector {
 public:
  StateVector(Eigen::VectorXcd amplitudes, DimsLayout layout);

  const Eigen::VectorXcd &amplitudes() const { return amplitudes_; }
  const DimsLayout &layout() const { return layout_; }

 private:
  Eigen::VectorXcd amplitudes_;
  DimsLayout layout_;
};

/// Validated density matrix: Hermitian, unit trace, positive semidefinite.
class DensityMatrix {
 public:
  /// Validates against `tol`; throws InvalidArgument on failure.
  DensityMatrix(Eigen::MatrixXcd entries, DimsLayout layout,
                const Tolerances &tol = default_tolerances());

  /// |psi><psi|.
  static DensityMatrix from_pure(const StateVector &psi);

  /// Skips validation. For matrices produced by operations that preserve
  /// validity (partial traces, projectors of normalized vectors).
  static DensityMatrix trusted(Eigen::MatrixXcd entries, DimsLayout layout);

  const Eigen::MatrixXcd &entries() const { return entries_; }
  const DimsLayout &layout() const { return layout_; }
  std::size_t dim() const { return layout_.total_dim(); }

 private:
  struct TrustedTag {};
  DensityMatrix(TrustedTag, Eigen::MatrixXcd entries, DimsLayout layout);

  Eigen::MatrixXcd entries_;
  DimsLayout layout_;
};

/// Non-increasing eigenvalues of a density matrix.
struct Spectrum {
  std::vector<double> values;
};

/// Normalizes `amplitudes` into a StateVector on `layout`.
/// Throws InvalidArgument on a length mismatch or a zero vector.
StateVector build_state_vector(std::span<const Complex> amplitudes, DimsLayout layout);
StateVector build_state_vector(const Eigen::VectorXcd &amplitudes, DimsLayout layout);

/// Reduced state on the parties in `keep`. The result carries the induced
/// layout with parties in ascending index order.
DensityMatrix partial_trace(const DensityMatrix &rho, std::vector<std::size_t> keep);

/// Reduced state of a pure state, computed as M M^dagger on the reshaped
/// amplitude matrix. Same result as partial_trace(from_pure(psi), keep).
DensityMatrix partial_trace(const StateVector &psi, std::vector<std::size_t> keep);

/// Sorted (non-increasing) eigenvalues. Values in [-clip, 0) are set to zero and
/// the spectrum is renormalized; anything more negative throws NumericError.
Spectrum spectrum(const DensityMatrix &rho, const Tolerances &tol = default_tolerances());

/// Spectral purification sum_i sqrt(lambda_i) |lambda_i> (x) |i> on layout
/// (rho dims..., rank). The ancilla is the last party.
StateVector purify(const DensityMatrix &rho, const Tolerances &tol = default_tolerances());

/// Haar-random pure state (normalized complex Gaussian vector).
StateVector haar_random_pure(const DimsLayout &layout, Rng &rng);

/// Tr_ancilla |psi><psi| for Haar |psi> on (dim, rank); single-party layout.
DensityMatrix random_density(int dim, int rank, Rng &rng);

/// As above, returned on an arbitrary layout of total dimension dim.
DensityMatrix random_density(const DimsLayout &layout, int rank, Rng &rng);

/// (|0...0> + |1...1>)/sqrt(2) on n qubits, n >= 2.
StateVector ghz_state(int n);

/// sum_i a_i |0..1_i..0> on N = a.size() qubits. Requires real amplitudes with
/// sum a_i^2 = 1 (within 1e-10) and every a_i nonzero.
StateVector w_class_state(std::span<const double> amplitudes);

/// Haar-random unitary (QR of a complex Ginibre matrix with phase fix).
Eigen::MatrixXcd haar_unitary(int dim, Rng &rng);

/// The smallest eigenvalue of each single-qubit marginal of a pure qubit state.
std::vector<double> smallest_marginal_eigenvalues(const StateVector &psi);

}  // namespace entpoly

#endif  // ENTPOLY_DISCRETE_HPP
