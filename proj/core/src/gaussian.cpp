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

#include "entpoly/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

#include "entpoly/error.hpp"

namespace entpoly {
namespace {

using Eigen::Index;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;

struct SquareRoots {
  MatrixXd half;
  MatrixXd inv_half;
};

SquareRoots square_roots(const MatrixXd &sigma) {
  Eigen::SelfAdjointEigenSolver<MatrixXd> solver(sigma);
  if (solver.info() != Eigen::Success) throw NumericError("covariance eigensolver did not converge");
  const auto &vals = solver.eigenvalues();
  if (vals.minCoeff() <= 0.0) throw NumericError("covariance matrix is not positive definite");
  const MatrixXd &q = solver.eigenvectors();
  SquareRoots out;
  out.half = q * vals.cwiseSqrt().asDiagonal() * q.transpose();
  out.inv_half = q * vals.cwiseSqrt().cwiseInverse().asDiagonal() * q.transpose();
  return out;
}

MatrixXd symmetrized(const MatrixXd &m) { return 0.5 * (m + m.transpose()); }

// Eigen-decomposition of sigma^{1/2} (i Omega) sigma^{1/2}; eigenvalues ascend,
// so the upper half holds +s_1 <= ... <= +s_n.
Eigen::SelfAdjointEigenSolver<MatrixXcd> hermitian_form(const MatrixXd &half, bool vectors) {
  const Index dim = half.rows();
  const MatrixXd m = half * symplectic_form(static_cast<int>(dim / 2)) * half;
  const MatrixXcd h = std::complex<double>(0.0, 1.0) * m.cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<MatrixXcd> solver(
      h, vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericError("symplectic spectrum: eigensolver did not converge");
  }
  return solver;
}

void check_even_square(const MatrixXd &sigma, const char *who) {
  if (sigma.rows() != sigma.cols() || sigma.rows() == 0 || sigma.rows() % 2 != 0) {
    throw InvalidArgument(std::string(who) + ": covariance matrix must be square with even size");
  }
}

}  // namespace

ModePartition::ModePartition(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) throw InvalidArgument("ModePartition: no parties");
  for (int m : sizes_) {
    if (m < 1) throw InvalidArgument("ModePartition: every party needs at least one mode");
    offsets_.push_back(total_);
    total_ += m;
  }
}

ModePartition ModePartition::single_modes(int n) {
  return ModePartition(std::vector<int>(static_cast<std::size_t>(n), 1));
}

CovarianceMatrix::CovarianceMatrix(Eigen::MatrixXd entries, const Tolerances &tol)
    : entries_(std::move(entries)) {
  const ValidityReport report = validate_cm(entries_, tol);
  if (!report.valid) {
    throw InvalidArgument("CovarianceMatrix: not bona fide (min symplectic eigenvalue " +
                          std::to_string(report.min_symplectic_eigenvalue) + ")");
  }
  entries_ = symmetrized(entries_);
}

CovarianceMatrix CovarianceMatrix::trusted(Eigen::MatrixXd entries) {
  return CovarianceMatrix(TrustedTag{}, std::move(entries));
}

double SymplecticMatrix::symplectic_defect() const {
  const MatrixXd omega = symplectic_form(static_cast<int>(entries.rows() / 2));
  return (entries * omega * entries.transpose() - omega).cwiseAbs().maxCoeff();
}

Eigen::MatrixXd WilliamsonDecomposition::diagonal() const {
  const auto n = static_cast<Index>(spectrum.size());
  Eigen::VectorXd d(2 * n);
  for (Index k = 0; k < n; ++k) d(2 * k) = d(2 * k + 1) = spectrum[static_cast<std::size_t>(k)];
  return d.asDiagonal();
}

Eigen::MatrixXd symplectic_form(int n) {
  if (n < 1) throw InvalidArgument("symplectic_form: n must be positive");
  MatrixXd omega = MatrixXd::Zero(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) {
    omega(2 * k, 2 * k + 1) = 1.0;
    omega(2 * k + 1, 2 * k) = -1.0;
  }
  return omega;
}

ValidityReport validate_cm(const Eigen::MatrixXd &sigma, const Tolerances &tol) {
  check_even_square(sigma, "validate_cm");
  if (!sigma.allFinite()) throw InvalidArgument("validate_cm: non-finite entry");
  ValidityReport report;
  report.symmetry_defect = (sigma - sigma.transpose()).cwiseAbs().maxCoeff();
  if (report.symmetry_defect > tol.cm_symmetry) {
    throw InvalidArgument("validate_cm: matrix is not symmetric (defect " +
                          std::to_string(report.symmetry_defect) + ")");
  }
  const MatrixXd sym = symmetrized(sigma);
  Eigen::SelfAdjointEigenSolver<MatrixXd> plain(sym, Eigen::EigenvaluesOnly);
  if (plain.info() != Eigen::Success) throw NumericError("validate_cm: eigensolver failed");
  if (plain.eigenvalues().minCoeff() <= 0.0) {
    // sigma + i Omega >= 0 forces sigma > 0; no meaningful spectrum otherwise.
    report.min_symplectic_eigenvalue = 0.0;
    report.valid = false;
    return report;
  }
  const auto solver = hermitian_form(square_roots(sym).half, false);
  const Index n = sym.rows() / 2;
  const auto &vals = solver.eigenvalues();
  report.min_symplectic_eigenvalue = vals(n);
  report.valid = vals(n) >= 1.0 - tol.bona_fide;
  report.pure = report.valid && std::abs(vals(2 * n - 1) - 1.0) <= tol.pure_flag &&
                std::abs(vals(n) - 1.0) <= tol.pure_flag;
  return report;
}

SymplecticSpectrum symplectic_spectrum(const CovarianceMatrix &sigma, const Tolerances &tol) {
  const auto solver = hermitian_form(square_roots(sigma.entries()).half, false);
  const Index n = sigma.entries().rows() / 2;
  SymplecticSpectrum out;
  out.values.reserve(static_cast<std::size_t>(n));
  for (Index k = 0; k < n; ++k) {
    double s = solver.eigenvalues()(n + k);
    if (s < 1.0) {
      if (s < 1.0 - tol.bona_fide) {
        throw NumericError("symplectic_spectrum: eigenvalue " + std::to_string(s) + " < 1");
      }
      s = 1.0;
    }
    out.values.push_back(s);
  }
  return out;
}

WilliamsonDecomposition williamson(const CovarianceMatrix &sigma) {
  const MatrixXd &cm = sigma.entries();
  const Index n = cm.rows() / 2;
  const SquareRoots roots = square_roots(cm);
  const auto solver = hermitian_form(roots.half, true);

  // For H u = s u with u = x + i y, the antisymmetric M = sigma^{1/2} Omega sigma^{1/2}
  // obeys M x = s y and M y = -s x. With columns (sqrt2 y, sqrt2 x) the orthogonal
  // O brings M to the block form (+) s_k Omega_1.
  MatrixXd o(2 * n, 2 * n);
  std::vector<double> spectrum(static_cast<std::size_t>(n));
  for (Index k = 0; k < n; ++k) {
    const auto u = solver.eigenvectors().col(n + k);
    o.col(2 * k) = std::sqrt(2.0) * u.imag();
    o.col(2 * k + 1) = std::sqrt(2.0) * u.real();
    spectrum[static_cast<std::size_t>(k)] = solver.eigenvalues()(n + k);
  }
  // Re-orthonormalize (modified Gram-Schmidt); within degenerate clusters the
  // eigensolver basis is orthonormal only to working precision.
  for (Index k = 0; k < 2 * n; ++k) {
    for (Index j = 0; j < k; ++j) o.col(k) -= o.col(j).dot(o.col(k)) * o.col(j);
    o.col(k).normalize();
  }

  Eigen::VectorXd root_d(2 * n);
  for (Index k = 0; k < n; ++k) {
    root_d(2 * k) = root_d(2 * k + 1) = std::sqrt(spectrum[static_cast<std::size_t>(k)]);
  }
  WilliamsonDecomposition out;
  out.symplectic.entries = root_d.asDiagonal() * o.transpose() * roots.inv_half;
  // Same clamp as symplectic_spectrum, so pure modes report exactly 1.
  for (double &v : spectrum) {
    if (v < 1.0 && v >= 1.0 - default_tolerances().bona_fide) v = 1.0;
  }
  out.spectrum = std::move(spectrum);
  const MatrixXd &s = out.symplectic.entries;
  out.reconstruction_residual = (s * cm * s.transpose() - out.diagonal()).cwiseAbs().maxCoeff();
  out.symplectic_residual = out.symplectic.symplectic_defect();
  return out;
}

CovarianceMatrix marginal_cm(const CovarianceMatrix &sigma, const ModePartition &partition,
                             std::vector<std::size_t> keep) {
  if (partition.total_modes() != sigma.n_modes()) {
    throw InvalidArgument("marginal_cm: partition covers " + std::to_string(partition.total_modes()) +
                          " modes but the state has " + std::to_string(sigma.n_modes()));
  }
  if (keep.empty()) throw InvalidArgument("marginal_cm: keep set is empty");
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  if (keep.back() >= partition.num_parties()) {
    throw InvalidArgument("marginal_cm: party index out of range");
  }
  std::vector<Index> rows;
  for (auto p : keep) {
    const int first = partition.offset(p);
    for (int m = 0; m < partition.sizes()[p]; ++m) {
      rows.push_back(2 * (first + m));
      rows.push_back(2 * (first + m) + 1);
    }
  }
  const auto k = static_cast<Index>(rows.size());
  MatrixXd out(k, k);
  for (Index i = 0; i < k; ++i) {
    for (Index j = 0; j < k; ++j) {
      out(i, j) = sigma.entries()(rows[static_cast<std::size_t>(i)], rows[static_cast<std::size_t>(j)]);
    }
  }
  return CovarianceMatrix::trusted(std::move(out));
}

CovarianceMatrix two_mode_squeezed(double r) {
  if (!std::isfinite(r)) throw InvalidArgument("two_mode_squeezed: r must be finite");
  const double c = std::cosh(2.0 * r);
  const double s = std::sinh(2.0 * r);
  MatrixXd m = MatrixXd::Zero(4, 4);
  m(0, 0) = m(1, 1) = m(2, 2) = m(3, 3) = c;
  m(0, 2) = m(2, 0) = s;
  m(1, 3) = m(3, 1) = -s;
  return CovarianceMatrix::trusted(std::move(m));
}

SymplecticMatrix random_symplectic(int n, double z_max, Rng &rng) {
  if (n < 1) throw InvalidArgument("random_symplectic: n must be positive");
  if (!(z_max > 0.0)) throw InvalidArgument("random_symplectic: z_max must be positive");
  const Index dim = 2 * n;
  MatrixXd h(dim, dim);
  for (Index i = 0; i < dim; ++i) {
    for (Index j = 0; j <= i; ++j) h(i, j) = h(j, i) = standard_normal(rng);
  }
  MatrixXd generator = symplectic_form(n) * h;
  const double norm = generator.norm();
  const double target = z_max * uniform01(rng);
  if (norm > 0.0) generator *= target / norm;
  SymplecticMatrix out;
  out.entries = generator.exp();
  return out;
}

PlantedCm random_cm_planted(int n, Rng &rng, double z_max, double s_max) {
  if (!(s_max >= 1.0)) throw InvalidArgument("random_cm: s_max must be >= 1");
  const SymplecticMatrix s = random_symplectic(n, z_max, rng);
  std::vector<double> planted(static_cast<std::size_t>(n));
  for (auto &v : planted) v = 1.0 + (s_max - 1.0) * uniform01(rng);
  Eigen::VectorXd d(2 * n);
  for (int k = 0; k < n; ++k) d(2 * k) = d(2 * k + 1) = planted[static_cast<std::size_t>(k)];
  MatrixXd sigma = symmetrized(s.entries * d.asDiagonal() * s.entries.transpose());
  std::sort(planted.begin(), planted.end());
  return PlantedCm{CovarianceMatrix::trusted(std::move(sigma)), std::move(planted)};
}

CovarianceMatrix random_cm(int n, CmKind kind, Rng &rng, double z_max, double s_max) {
  if (kind == CmKind::Mixed) return random_cm_planted(n, rng, z_max, s_max).sigma;
  const SymplecticMatrix s = random_symplectic(n, z_max, rng);
  return CovarianceMatrix::trusted(symmetrized(s.entries * s.entries.transpose()));
}

CovarianceMatrix gaussian_purify(const CovarianceMatrix &sigma) {
  const int n = sigma.n_modes();
  const WilliamsonDecomposition w = williamson(sigma);
  const MatrixXd omega = symplectic_form(n);
  // S^{-1} = -Omega S^T Omega for symplectic S.
  const MatrixXd s_inv = -omega * w.symplectic.entries.transpose() * omega;

  MatrixXd pure = MatrixXd::Zero(4 * n, 4 * n);
  for (int k = 0; k < n; ++k) {
    const double s = w.spectrum[static_cast<std::size_t>(k)];
    const double c = std::sqrt(std::max(0.0, s * s - 1.0));
    const int sys = 2 * k;
    const int anc = 2 * (n + k);
    pure(sys, sys) = pure(sys + 1, sys + 1) = s;
    pure(anc, anc) = pure(anc + 1, anc + 1) = s;
    pure(sys, anc) = pure(anc, sys) = c;
    pure(sys + 1, anc + 1) = pure(anc + 1, sys + 1) = -c;
  }
  MatrixXd t = MatrixXd::Identity(4 * n, 4 * n);
  t.topLeftCorner(2 * n, 2 * n) = s_inv;
  return CovarianceMatrix::trusted(symmetrized(t * pure * t.transpose()));
}

LocalNormalForm local_normal_form(const CovarianceMatrix &sigma, const ModePartition &partition) {
  if (partition.total_modes() != sigma.n_modes()) {
    throw InvalidArgument("local_normal_form: partition does not match the number of modes");
  }
  const Index dim = sigma.entries().rows();
  MatrixXd v = MatrixXd::Zero(dim, dim);
  std::vector<double> d;
  d.reserve(static_cast<std::size_t>(sigma.n_modes()));
  for (std::size_t p = 0; p < partition.num_parties(); ++p) {
    const CovarianceMatrix block = marginal_cm(sigma, partition, {p});
    const WilliamsonDecomposition w = williamson(block);
    const Index first = 2 * partition.offset(p);
    const Index size = 2 * partition.sizes()[p];
    v.block(first, first, size, size) = w.symplectic.entries;
    d.insert(d.end(), w.spectrum.begin(), w.spectrum.end());
  }
  LocalNormalForm out{CovarianceMatrix::trusted(symmetrized(v * sigma.entries() * v.transpose())),
                      std::move(d), SymplecticMatrix{std::move(v)}};
  return out;
}

std::vector<double> diagonal_pair_vector(const CovarianceMatrix &sigma) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(sigma.n_modes()));
  for (int k = 0; k < sigma.n_modes(); ++k) {
    const double det = sigma.entries().block<2, 2>(2 * k, 2 * k).determinant();
    out.push_back(std::sqrt(std::max(det, 0.0)));
  }
  return out;
}

double gaussian_purity(const CovarianceMatrix &sigma) {
  return 1.0 / std::sqrt(sigma.entries().determinant());
}

}  // namespace entpoly
