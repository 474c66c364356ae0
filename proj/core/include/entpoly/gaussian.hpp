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

#ifndef ENTPOLY_GAUSSIAN_HPP
#define ENTPOLY_GAUSSIAN_HPP

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "entpoly/rng.hpp"
#include "entpoly/tolerances.hpp"

namespace entpoly {

// Units: the vacuum covariance matrix is the identity, so every symplectic
// eigenvalue of a physical state is >= 1. Quadratures are ordered
// (q_1, p_1, q_2, p_2, ..., q_n, p_n).

/// Per-party mode counts m_1, ..., m_N. Parties occupy consecutive modes.
class ModePartition {
 public:
  explicit ModePartition(std::vector<int> sizes);

  /// n single-mode parties.
  static ModePartition single_modes(int n);

  const std::vector<int> &sizes() const { return sizes_; }
  std::size_t num_parties() const { return sizes_.size(); }
  int total_modes() const { return total_; }
  /// First mode of party p.
  int offset(std::size_t party) const { return offsets_.at(party); }

 private:
  std::vector<int> sizes_;
  std::vector<int> offsets_;
  int total_ = 0;
};

struct ValidityReport {
  double symmetry_defect = 0.0;
  double min_symplectic_eigenvalue = 0.0;
  bool valid = false;
  bool pure = false;
};

/// Bona fide covariance matrix of an n-mode Gaussian state.
class CovarianceMatrix {
 public:
  /// Throws InvalidArgument if the matrix is not symmetric or violates the
  /// uncertainty principle (some s_i < 1 - tol.bona_fide).
  explicit CovarianceMatrix(Eigen::MatrixXd entries, const Tolerances &tol = default_tolerances());

  /// Skips validation. Used for congruences and submatrices of valid inputs.
  static CovarianceMatrix trusted(Eigen::MatrixXd entries);

  const Eigen::MatrixXd &entries() const { return entries_; }
  int n_modes() const { return static_cast<int>(entries_.rows() / 2); }

 private:
  struct TrustedTag {};
  CovarianceMatrix(TrustedTag, Eigen::MatrixXd entries) : entries_(std::move(entries)) {}

  Eigen::MatrixXd entries_;
};

/// Non-decreasing symplectic eigenvalues s_1 <= ... <= s_n.
struct SymplecticSpectrum {
  std::vector<double> values;
};

/// Real 2n x 2n matrix satisfying S Omega S^T = Omega.
struct SymplecticMatrix {
  Eigen::MatrixXd entries;

  /// max |S Omega S^T - Omega|.
  double symplectic_defect() const;
};

/// Direct sum of n blocks [[0, 1], [-1, 0]].
Eigen::MatrixXd symplectic_form(int n);

/// Symmetry defect, minimum symplectic eigenvalue, validity and purity.
/// Throws InvalidArgument for a non-square or odd-sized matrix, or for an
/// asymmetry beyond tol.cm_symmetry.
ValidityReport validate_cm(const Eigen::MatrixXd &sigma, const Tolerances &tol = default_tolerances());

/// Symplectic spectrum from the Hermitian matrix sigma^{1/2} (i Omega) sigma^{1/2},
/// whose eigenvalues are +-s_i. Values within tol.bona_fide below 1 are
/// clamped to 1.
SymplecticSpectrum symplectic_spectrum(const CovarianceMatrix &sigma,
                                       const Tolerances &tol = default_tolerances());

struct WilliamsonDecomposition {
  SymplecticMatrix symplectic;
  /// s_1, ..., s_n in non-decreasing order; D = diag(s_1, s_1, ..., s_n, s_n).
  std::vector<double> spectrum;
  /// max |S sigma S^T - D|.
  double reconstruction_residual = 0.0;
  /// max |S Omega S^T - Omega|.
  double symplectic_residual = 0.0;

  Eigen::MatrixXd diagonal() const;
};

/// S with S sigma S^T = diag(s_1, s_1, ..., s_n, s_n). The achieved residuals
/// are reported rather than enforced.
WilliamsonDecomposition williamson(const CovarianceMatrix &sigma);

/// Principal submatrix on the modes of the parties in `keep`.
CovarianceMatrix marginal_cm(const CovarianceMatrix &sigma, const ModePartition &partition,
                             std::vector<std::size_t> keep);

/// Two-mode squeezed vacuum with squeezing r.
CovarianceMatrix two_mode_squeezed(double r);

/// exp(Omega H) with H random symmetric, scaled so that ||Omega H||_F is
/// uniform in [0, z_max].
SymplecticMatrix random_symplectic(int n, double z_max, Rng &rng);

enum class CmKind { Pure, Mixed };

/// Pure: S S^T. Mixed: S D S^T with s_i uniform in [1, s_max].
CovarianceMatrix random_cm(int n, CmKind kind, Rng &rng, double z_max = 2.0, double s_max = 4.0);

/// Plant-and-recover variant of random_cm: also returns the planted spectrum.
struct PlantedCm {
  CovarianceMatrix sigma;
  std::vector<double> planted;  // ascending
};
PlantedCm random_cm_planted(int n, Rng &rng, double z_max, double s_max);

/// Pure 2n-mode CM whose first n modes reproduce sigma. Built from the
/// Williamson form with one two-mode squeezer per mode, cosh(2 r_i) = s_i.
CovarianceMatrix gaussian_purify(const CovarianceMatrix &sigma);

struct LocalNormalForm {
  CovarianceMatrix sigma_prime;
  /// Local symplectic eigenvalues, party by party (ascending within a party).
  std::vector<double> d;
  /// The block-diagonal local symplectic V with sigma_prime = V sigma V^T.
  SymplecticMatrix local;
};

/// Applies each party's Williamson symplectic locally so that every diagonal
/// block of the result is diag(d_1, d_1, ..., d_m, d_m).
LocalNormalForm local_normal_form(const CovarianceMatrix &sigma, const ModePartition &partition);

/// sqrt(det) of each single-mode 2x2 block: the single-mode local symplectic
/// eigenvalues, equal to the paired diagonal entries once each mode is in
/// normal form.
std::vector<double> diagonal_pair_vector(const CovarianceMatrix &sigma);

/// det(sigma)^{-1/2}, the purity tr rho^2.
double gaussian_purity(const CovarianceMatrix &sigma);

}  // namespace entpoly

#endif  // ENTPOLY_GAUSSIAN_HPP
