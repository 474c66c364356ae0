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

#ifndef ENTPOLY_TOLERANCES_HPP
#define ENTPOLY_TOLERANCES_HPP

namespace entpoly {

/// Every numerical threshold used by the library, in one place.
struct Tolerances {
  /// Unit-norm check on state vectors.
  double normalization = 1e-12;
  /// Hermiticity and unit trace of density matrices.
  double hermitian = 1e-12;
  /// Eigenvalues in [-clip, 0) are clipped to zero; below that is an error.
  double eigenvalue_clip = 1e-10;
  /// Generic validation threshold (spectra, marginal sums, purity of states).
  double validation = 1e-10;
  /// Symmetry of covariance matrices.
  double cm_symmetry = 1e-10;
  /// Bona fide condition: symplectic eigenvalues must be >= 1 - this.
  double bona_fide = 1e-8;
  /// Symplectic condition S Omega S^T = Omega.
  double symplectic = 1e-8;
  /// A covariance matrix is reported pure when all s_i are within this of 1.
  double pure_flag = 1e-6;
  /// Pure-state checks for one-to-rest inputs.
  double purity = 1e-8;
  /// Gaussian terms with s - 1 below this contribute exactly zero entropy.
  double near_pure_gaussian = 1e-12;
  /// A relation fails only when its slack is below -violation.
  double violation = 1e-9;
  /// Counterexample searches report a witness only below -witness.
  double witness = 1e-6;
};

/// Library-wide defaults.
inline const Tolerances &default_tolerances() {
  static const Tolerances tol{};
  return tol;
}

}  // namespace entpoly

#endif  // ENTPOLY_TOLERANCES_HPP
