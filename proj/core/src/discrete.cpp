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

#include "entpoly/discrete.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "entpoly/error.hpp"

namespace entpoly {
namespace {

std::vector<std::size_t> normalize_keep(std::vector<std::size_t> keep, std::size_t parties) {
  if (keep.empty()) throw InvalidArgument("partial_trace: keep set is empty");
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  if (keep.back() >= parties) {
    throw InvalidArgument("partial_trace: party index " + std::to_string(keep.back()) +
                          " out of range for " + std::to_string(parties) + " parties");
  }
  return keep;
}

// Splits every linear index into (kept index, traced index) under the
// slowest-varying-first convention.
struct IndexSplit {
  std::vector<std::size_t> kept;
  std::vector<std::size_t> traced;
  std::size_t kept_dim = 1;
  std::size_t traced_dim = 1;
};

IndexSplit split_indices(const DimsLayout &layout, const std::vector<std::size_t> &keep) {
  const std::size_t n = layout.num_parties();
  std::vector<bool> is_kept(n, false);
  for (auto p : keep) is_kept[p] = true;

  IndexSplit split;
  for (std::size_t p = 0; p < n; ++p) {
    (is_kept[p] ? split.kept_dim : split.traced_dim) *= static_cast<std::size_t>(layout.dim(p));
  }
  const std::size_t total = layout.total_dim();
  split.kept.resize(total);
  split.traced.resize(total);
  std::vector<int> digits(n, 0);
  for (std::size_t i = 0; i < total; ++i) {
    std::size_t k = 0;
    std::size_t t = 0;
    for (std::size_t p = 0; p < n; ++p) {
      if (is_kept[p]) {
        k = k * layout.dim(p) + digits[p];
      } else {
        t = t * layout.dim(p) + digits[p];
      }
    }
    split.kept[i] = k;
    split.traced[i] = t;
    // Increment the mixed-radix counter, last party fastest.
    for (std::size_t p = n; p-- > 0;) {
      if (++digits[p] < layout.dim(p)) break;
      digits[p] = 0;
    }
  }
  return split;
}

}  // namespace

DimsLayout::DimsLayout(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw InvalidArgument("DimsLayout: no parties");
  for (int d : dims_) {
    if (d < 1) throw InvalidArgument("DimsLayout: local dimension must be positive");
    total_ *= static_cast<std::size_t>(d);
  }
}

DimsLayout DimsLayout::subset(std::span<const std::size_t> parties) const {
  std::vector<int> out;
  out.reserve(parties.size());
  for (auto p : parties) out.push_back(dims_.at(p));
  return DimsLayout(std::move(out));
}

StateVector::StateVector(Eigen::VectorXcd amplitudes, DimsLayout layout)
    : amplitudes_(std::move(amplitudes)), layout_(std::move(layout)) {
  if (static_cast<std::size_t>(amplitudes_.size()) != layout_.total_dim()) {
    throw InvalidArgument("StateVector: amplitude count " + std::to_string(amplitudes_.size()) +
                          " does not match layout dimension " +
                          std::to_string(layout_.total_dim()));
  }
  if (std::abs(amplitudes_.norm() - 1.0) > default_tolerances().normalization) {
    throw InvalidArgument("StateVector: amplitudes are not normalized");
  }
}

DensityMatrix::DensityMatrix(Eigen::MatrixXcd entries, DimsLayout layout, const Tolerances &tol)
    : entries_(std::move(entries)), layout_(std::move(layout)) {
  const auto d = static_cast<Eigen::Index>(layout_.total_dim());
  if (entries_.rows() != d || entries_.cols() != d) {
    throw InvalidArgument("DensityMatrix: matrix shape does not match layout dimension");
  }
  if (!entries_.allFinite()) throw InvalidArgument("DensityMatrix: non-finite entry");
  const double herm = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
  if (herm > tol.hermitian) {
    throw InvalidArgument("DensityMatrix: not Hermitian (defect " + std::to_string(herm) + ")");
  }
  const Complex tr = entries_.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > tol.hermitian) {
    throw InvalidArgument("DensityMatrix: trace is not 1");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(entries_, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericError("DensityMatrix: eigensolver failed");
  if (solver.eigenvalues().minCoeff() < -tol.eigenvalue_clip) {
    throw InvalidArgument("DensityMatrix: negative eigenvalue " +
                          std::to_string(solver.eigenvalues().minCoeff()));
  }
}

DensityMatrix::DensityMatrix(TrustedTag, Eigen::MatrixXcd entries, DimsLayout layout)
    : entries_(std::move(entries)), layout_(std::move(layout)) {}

DensityMatrix DensityMatrix::trusted(Eigen::MatrixXcd entries, DimsLayout layout) {
  return DensityMatrix(TrustedTag{}, std::move(entries), std::move(layout));
}

DensityMatrix DensityMatrix::from_pure(const StateVector &psi) {
  const auto &a = psi.amplitudes();
  return trusted(a * a.adjoint(), psi.layout());
}

StateVector build_state_vector(const Eigen::VectorXcd &amplitudes, DimsLayout layout) {
  if (static_cast<std::size_t>(amplitudes.size()) != layout.total_dim()) {
    throw InvalidArgument("build_state_vector: " + std::to_string(amplitudes.size()) +
                          " amplitudes for layout of dimension " +
                          std::to_string(layout.total_dim()));
  }
  const double norm = amplitudes.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw InvalidArgument("build_state_vector: zero or non-finite vector");
  }
  return StateVector(amplitudes / norm, std::move(layout));
}

StateVector build_state_vector(std::span<const Complex> amplitudes, DimsLayout layout) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(amplitudes.size()));
  for (std::size_t i = 0; i < amplitudes.size(); ++i) v(static_cast<Eigen::Index>(i)) = amplitudes[i];
  return build_state_vector(v, std::move(layout));
}

DensityMatrix partial_trace(const DensityMatrix &rho, std::vector<std::size_t> keep) {
  keep = normalize_keep(std::move(keep), rho.layout().num_parties());
  const IndexSplit split = split_indices(rho.layout(), keep);
  const auto kd = static_cast<Eigen::Index>(split.kept_dim);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(kd, kd);
  const auto &m = rho.entries();
  const std::size_t total = rho.layout().total_dim();
  for (std::size_t c = 0; c < total; ++c) {
    for (std::size_t r = 0; r < total; ++r) {
      if (split.traced[r] == split.traced[c]) {
        out(static_cast<Eigen::Index>(split.kept[r]), static_cast<Eigen::Index>(split.kept[c])) +=
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
      }
    }
  }
  return DensityMatrix::trusted(std::move(out), rho.layout().subset(keep));
}

DensityMatrix partial_trace(const StateVector &psi, std::vector<std::size_t> keep) {
  keep = normalize_keep(std::move(keep), psi.layout().num_parties());
  const IndexSplit split = split_indices(psi.layout(), keep);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(split.kept_dim),
                                              static_cast<Eigen::Index>(split.traced_dim));
  const auto &a = psi.amplitudes();
  for (std::size_t i = 0; i < psi.layout().total_dim(); ++i) {
    m(static_cast<Eigen::Index>(split.kept[i]), static_cast<Eigen::Index>(split.traced[i])) =
        a(static_cast<Eigen::Index>(i));
  }
  Eigen::MatrixXcd out = m * m.adjoint();
  return DensityMatrix::trusted(std::move(out), psi.layout().subset(keep));
}

Spectrum spectrum(const DensityMatrix &rho, const Tolerances &tol) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.entries(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericError("spectrum: eigensolver did not converge");
  std::vector<double> values(solver.eigenvalues().data(),
                             solver.eigenvalues().data() + solver.eigenvalues().size());
  double sum = 0.0;
  for (double &v : values) {
    if (v < -tol.eigenvalue_clip) {
      throw NumericError("spectrum: eigenvalue " + std::to_string(v) + " is below the clip threshold");
    }
    if (v < 0.0) v = 0.0;
    sum += v;
  }
  if (!(sum > 0.0)) throw NumericError("spectrum: zero trace");
  for (double &v : values) v /= sum;
  std::sort(values.begin(), values.end(), std::greater<>());
  return Spectrum{std::move(values)};
}

StateVector purify(const DensityMatrix &rho, const Tolerances &tol) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.entries());
  if (solver.info() != Eigen::Success) throw NumericError("purify: eigensolver did not converge");
  const auto &vals = solver.eigenvalues();
  const auto &vecs = solver.eigenvectors();
  std::vector<Eigen::Index> support;
  for (Eigen::Index k = vals.size(); k-- > 0;) {
    if (vals(k) > tol.eigenvalue_clip) support.push_back(k);
  }
  if (support.empty()) throw NumericError("purify: state has no support");
  const auto d = static_cast<Eigen::Index>(rho.dim());
  const auto r = static_cast<Eigen::Index>(support.size());
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(d * r);
  for (Eigen::Index j = 0; j < r; ++j) {
    const double weight = std::sqrt(vals(support[static_cast<std::size_t>(j)]));
    const auto col = vecs.col(support[static_cast<std::size_t>(j)]);
    for (Eigen::Index i = 0; i < d; ++i) psi(i * r + j) = weight * col(i);
  }
  std::vector<int> dims = rho.layout().dims();
  dims.push_back(static_cast<int>(r));
  return build_state_vector(psi, DimsLayout(std::move(dims)));
}

StateVector haar_random_pure(const DimsLayout &layout, Rng &rng) {
  const auto d = static_cast<Eigen::Index>(layout.total_dim());
  Eigen::VectorXcd v(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    const double re = standard_normal(rng);
    const double im = standard_normal(rng);
    v(i) = Complex(re, im);
  }
  return build_state_vector(v, layout);
}

DensityMatrix random_density(const DimsLayout &layout, int rank, Rng &rng) {
  const int dim = static_cast<int>(layout.total_dim());
  if (rank < 1 || rank > dim) {
    throw InvalidArgument("random_density: rank " + std::to_string(rank) + " outside [1, " +
                          std::to_string(dim) + "]");
  }
  const StateVector psi = haar_random_pure(DimsLayout({dim, rank}), rng);
  const DensityMatrix reduced = partial_trace(psi, {0});
  return DensityMatrix::trusted(reduced.entries(), layout);
}

DensityMatrix random_density(int dim, int rank, Rng &rng) {
  if (dim < 1) throw InvalidArgument("random_density: dimension must be positive");
  return random_density(DimsLayout({dim}), rank, rng);
}

StateVector ghz_state(int n) {
  if (n < 2) throw InvalidArgument("ghz_state: need at least 2 qubits");
  DimsLayout layout(std::vector<int>(static_cast<std::size_t>(n), 2));
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(layout.total_dim()));
  v(0) = 1.0;
  v(v.size() - 1) = 1.0;
  return build_state_vector(v, std::move(layout));
}

StateVector w_class_state(std::span<const double> amplitudes) {
  const std::size_t n = amplitudes.size();
  if (n < 2) throw InvalidArgument("w_class_state: need at least 2 qubits");
  double norm2 = 0.0;
  for (double a : amplitudes) {
    if (a == 0.0 || !std::isfinite(a)) {
      throw InvalidArgument("w_class_state: every amplitude must be finite and nonzero");
    }
    norm2 += a * a;
  }
  if (std::abs(norm2 - 1.0) > 1e-10) {
    throw InvalidArgument("w_class_state: squared amplitudes must sum to 1");
  }
  DimsLayout layout(std::vector<int>(n, 2));
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(layout.total_dim()));
  for (std::size_t i = 0; i < n; ++i) {
    // Qubit i excited: bit (n-1-i) of the linear index, party 0 most significant.
    v(static_cast<Eigen::Index>(std::size_t{1} << (n - 1 - i))) = amplitudes[i];
  }
  return build_state_vector(v, std::move(layout));
}

Eigen::MatrixXcd haar_unitary(int dim, Rng &rng) {
  if (dim < 1) throw InvalidArgument("haar_unitary: dimension must be positive");
  Eigen::MatrixXcd g(dim, dim);
  for (int c = 0; c < dim; ++c) {
    for (int r = 0; r < dim; ++r) {
      const double re = standard_normal(rng);
      const double im = standard_normal(rng);
      g(r, c) = Complex(re, im);
    }
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd rmat = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < dim; ++k) {
    const Complex diag = rmat(k, k);
    const double mag = std::abs(diag);
    if (mag > 0.0) q.col(k) *= diag / mag;
  }
  return q;
}

std::vector<double> smallest_marginal_eigenvalues(const StateVector &psi) {
  const std::size_t n = psi.layout().num_parties();
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t p = 0; p < n; ++p) {
    if (psi.layout().dim(p) != 2) {
      throw InvalidArgument("smallest_marginal_eigenvalues: party " + std::to_string(p) +
                            " is not a qubit");
    }
    const auto rho = partial_trace(psi, {p}).entries();
    const double a = rho(0, 0).real();
    const double d = rho(1, 1).real();
    const double b = std::abs(rho(0, 1));
    const double tr = a + d;
    const double gap = std::sqrt((a - d) * (a - d) + 4.0 * b * b);
    out.push_back(std::max(0.0, 0.5 * (tr - gap)));
  }
  return out;
}

}  // namespace entpoly
