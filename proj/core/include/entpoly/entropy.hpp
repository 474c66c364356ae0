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

#ifndef ENTPOLY_ENTROPY_HPP
#define ENTPOLY_ENTROPY_HPP

#include <string>
#include <string_view>
#include <vector>

#include "entpoly/discrete.hpp"
#include "entpoly/gaussian.hpp"

namespace entpoly {

enum class EntropyFamily { VonNeumann, Renyi, Tsallis };

/// Entropy family, order and logarithm base.
///
/// Renyi and Tsallis orders must exceed 1. The base applies to von Neumann and
/// Renyi values; Tsallis entropy is base-independent and ignores it.
class EntropySpec {
 public:
  static EntropySpec von_neumann(double log_base = 2.0);
  static EntropySpec renyi(double p, double log_base = 2.0);
  static EntropySpec tsallis(double q);

  /// Compact form: "S", "S:b=2", "R:p=2", "R:p=2:b=2", "T:q=1.5".
  /// "b=e" selects the natural logarithm.
  static EntropySpec parse(std::string_view text);

  EntropyFamily family() const { return family_; }
  /// p or q; 1 for von Neumann.
  double order() const { return order_; }
  double log_base() const { return log_base_; }
  /// ln(log_base).
  double ln_base() const;

  /// Inverse of parse. Tsallis omits the base.
  std::string to_string() const;

  bool operator==(const EntropySpec &) const = default;

 private:
  EntropySpec(EntropyFamily family, double order, double log_base);

  EntropyFamily family_;
  double order_;
  double log_base_;
};

/// Entropy of a discrete spectrum.
double entropy_discrete(const Spectrum &spec, const EntropySpec &e);
double entropy_discrete(const std::vector<double> &eigenvalues, const EntropySpec &e);

/// Entropy of a Gaussian state from its symplectic spectrum.
double entropy_gaussian(const SymplecticSpectrum &s, const EntropySpec &e);

/// 2^x / ((y+1)^x - (y-1)^x): tr rho^x of a single mode with symplectic eigenvalue y.
double g_factor(double y, double x);

/// Entropy of a qubit with smaller eigenvalue lambda in [0, 1/2].
double qubit_entropy_fn(double lambda, const EntropySpec &e);

/// Entropy of a single mode with symplectic eigenvalue s >= 1.
double mode_entropy_fn(double s, const EntropySpec &e);

double entropy_of_state(const DensityMatrix &rho, const EntropySpec &e);
double entropy_of_state(const CovarianceMatrix &sigma, const EntropySpec &e);

/// T_q as a function of R_q with the same base: (b^{(1-q) x} - 1) / (1 - q).
double tsallis_from_renyi(double renyi_value, double q, double log_base);

enum class DerivativeKind {
  /// f_E(lambda) on (0, 1/2).
  QubitF,
  /// g_E(s~) with s~ = s - 1 on (0, inf).
  ModeGShifted,
};

/// Closed-form first or second derivative of the qubit or shifted single-mode
/// entropy function. The point must lie strictly inside the domain.
double derivative(DerivativeKind kind, const EntropySpec &e, int order, double point);

struct MonotonicityPoint {
  double x;
  double first;
  double second;
};

struct MonotonicityReport {
  std::vector<MonotonicityPoint> points;
  bool nondecreasing = true;
  bool concave = true;
  /// Grid points where the second derivative is positive (convex region).
  std::vector<double> convex_points;
};

/// Signs of the first and second derivatives on `grid`.
MonotonicityReport monotonicity_scan(DerivativeKind kind, const EntropySpec &e,
                                     const std::vector<double> &grid);

}  // namespace entpoly

#endif  // ENTPOLY_ENTROPY_HPP
