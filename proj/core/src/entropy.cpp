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

#include "entpoly/entropy.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

#include "entpoly/error.hpp"

namespace entpoly {
namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr double kSignThreshold = 1e-12;

double parse_number(std::string_view text, std::string_view context) {
  if (text == "e") return std::numbers::e;
  double value = 0.0;
  const auto *begin = text.data();
  const auto *end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw InvalidArgument("malformed number '" + std::string(text) + "' in entropy spec '" +
                          std::string(context) + "'");
  }
  return value;
}

std::string format_number(double v) {
  if (v == std::numbers::e) return "e";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

// ln((y+1)^x - (y-1)^x) without cancellation for large y.
double log_power_gap(double y, double x) {
  const double ratio = (y - 1.0) / (y + 1.0);
  return x * std::log(y + 1.0) + std::log1p(-std::pow(ratio, x));
}

// ln g_x(y).
double log_g(double y, double x) {
  if (y == 1.0) return 0.0;
  return x * kLn2 - log_power_gap(y, x);
}

void check_order(double order, const char *who) {
  if (!(order > 1.0) || !std::isfinite(order)) {
    throw InvalidArgument(std::string(who) + ": order must be finite and > 1");
  }
}

double vn_mode_term(double s, double near_pure) {
  if (s - 1.0 < near_pure) return 0.0;
  const double plus = 0.5 * (s + 1.0);
  const double minus = 0.5 * (s - 1.0);
  return plus * std::log(plus) - minus * std::log(minus);
}

void check_symplectic_value(double s, const char *who) {
  if (!(s >= 1.0 - default_tolerances().bona_fide) || !std::isfinite(s)) {
    throw InvalidArgument(std::string(who) + ": symplectic eigenvalue " + std::to_string(s) +
                          " is below 1");
  }
}

}  // namespace

EntropySpec::EntropySpec(EntropyFamily family, double order, double log_base)
    : family_(family), order_(order), log_base_(log_base) {
  if (family_ != EntropyFamily::VonNeumann) check_order(order_, "EntropySpec");
  if (!(log_base_ > 1.0) || !std::isfinite(log_base_)) {
    throw InvalidArgument("EntropySpec: logarithm base must be finite and > 1");
  }
}

EntropySpec EntropySpec::von_neumann(double log_base) {
  return EntropySpec(EntropyFamily::VonNeumann, 1.0, log_base);
}

EntropySpec EntropySpec::renyi(double p, double log_base) {
  return EntropySpec(EntropyFamily::Renyi, p, log_base);
}

EntropySpec EntropySpec::tsallis(double q) { return EntropySpec(EntropyFamily::Tsallis, q, 2.0); }

double EntropySpec::ln_base() const { return std::log(log_base_); }

EntropySpec EntropySpec::parse(std::string_view text) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t colon = text.find(':', start);
    fields.push_back(text.substr(start, colon == std::string_view::npos ? colon : colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  if (fields.empty() || fields[0].size() != 1) {
    throw InvalidArgument("entropy spec '" + std::string(text) + "' must start with S, R or T");
  }
  const char family = fields[0][0];
  double order = 0.0;
  bool has_order = false;
  double base = 2.0;
  for (std::size_t i = 1; i < fields.size(); ++i) {
    const auto f = fields[i];
    if (f.size() < 3 || f[1] != '=') {
      throw InvalidArgument("malformed field '" + std::string(f) + "' in entropy spec '" +
                            std::string(text) + "'");
    }
    const char key = f[0];
    const double value = parse_number(f.substr(2), text);
    if (key == 'b') {
      base = value;
    } else if ((key == 'p' && family == 'R') || (key == 'q' && family == 'T')) {
      order = value;
      has_order = true;
    } else {
      throw InvalidArgument("unexpected field '" + std::string(f) + "' in entropy spec '" +
                            std::string(text) + "'");
    }
  }
  switch (family) {
    case 'S':
      return von_neumann(base);
    case 'R':
      if (!has_order) throw InvalidArgument("Renyi spec needs p=<order>");
      return renyi(order, base);
    case 'T':
      if (!has_order) throw InvalidArgument("Tsallis spec needs q=<order>");
      return tsallis(order);
    default:
      throw InvalidArgument("entropy spec '" + std::string(text) + "' must start with S, R or T");
  }
}

std::string EntropySpec::to_string() const {
  switch (family_) {
    case EntropyFamily::VonNeumann:
      return "S:b=" + format_number(log_base_);
    case EntropyFamily::Renyi:
      return "R:p=" + format_number(order_) + ":b=" + format_number(log_base_);
    case EntropyFamily::Tsallis:
      return "T:q=" + format_number(order_);
  }
  return {};
}

double entropy_discrete(const std::vector<double> &eigenvalues, const EntropySpec &e) {
  const double tol = default_tolerances().validation;
  double sum = 0.0;
  for (double l : eigenvalues) {
    if (!(l >= -tol && l <= 1.0 + tol)) {
      throw InvalidArgument("entropy_discrete: eigenvalue " + std::to_string(l) + " outside [0, 1]");
    }
    sum += l;
  }
  if (std::abs(sum - 1.0) > tol) throw InvalidArgument("entropy_discrete: spectrum does not sum to 1");

  switch (e.family()) {
    case EntropyFamily::VonNeumann: {
      double h = 0.0;
      for (double l : eigenvalues) {
        if (l > 0.0) h -= l * std::log(l);
      }
      return h / e.ln_base();
    }
    case EntropyFamily::Renyi: {
      double tr = 0.0;
      for (double l : eigenvalues) {
        if (l > 0.0) tr += std::pow(l, e.order());
      }
      return std::log(tr) / ((1.0 - e.order()) * e.ln_base());
    }
    case EntropyFamily::Tsallis: {
      double tr = 0.0;
      for (double l : eigenvalues) {
        if (l > 0.0) tr += std::pow(l, e.order());
      }
      return (1.0 - tr) / (e.order() - 1.0);
    }
  }
  return 0.0;
}

double entropy_discrete(const Spectrum &spec, const EntropySpec &e) {
  return entropy_discrete(spec.values, e);
}

double entropy_gaussian(const SymplecticSpectrum &s, const EntropySpec &e) {
  const double near_pure = default_tolerances().near_pure_gaussian;
  for (double v : s.values) check_symplectic_value(v, "entropy_gaussian");
  switch (e.family()) {
    case EntropyFamily::VonNeumann: {
      double h = 0.0;
      for (double v : s.values) h += vn_mode_term(v, near_pure);
      return h / e.ln_base();
    }
    case EntropyFamily::Renyi: {
      double log_tr = 0.0;
      for (double v : s.values) {
        if (v - 1.0 >= near_pure) log_tr += log_g(v, e.order());
      }
      return log_tr / ((1.0 - e.order()) * e.ln_base());
    }
    case EntropyFamily::Tsallis: {
      double log_tr = 0.0;
      for (double v : s.values) {
        if (v - 1.0 >= near_pure) log_tr += log_g(v, e.order());
      }
      return -std::expm1(log_tr) / (e.order() - 1.0);
    }
  }
  return 0.0;
}

double g_factor(double y, double x) {
  if (!(y >= 1.0) || !std::isfinite(y)) throw InvalidArgument("g_factor: y must be >= 1");
  check_order(x, "g_factor");
  return std::exp(log_g(y, x));
}

double qubit_entropy_fn(double lambda, const EntropySpec &e) {
  if (!(lambda >= 0.0 && lambda <= 0.5)) {
    throw InvalidArgument("qubit_entropy_fn: lambda must lie in [0, 1/2]");
  }
  const double other = 1.0 - lambda;
  switch (e.family()) {
    case EntropyFamily::VonNeumann: {
      double h = -other * std::log(other);
      if (lambda > 0.0) h -= lambda * std::log(lambda);
      return h / e.ln_base();
    }
    case EntropyFamily::Renyi: {
      const double tr = std::pow(lambda, e.order()) + std::pow(other, e.order());
      return std::log(tr) / ((1.0 - e.order()) * e.ln_base());
    }
    case EntropyFamily::Tsallis: {
      const double tr = std::pow(lambda, e.order()) + std::pow(other, e.order());
      return (1.0 - tr) / (e.order() - 1.0);
    }
  }
  return 0.0;
}

double mode_entropy_fn(double s, const EntropySpec &e) {
  check_symplectic_value(s, "mode_entropy_fn");
  const double near_pure = default_tolerances().near_pure_gaussian;
  if (s - 1.0 < near_pure) return 0.0;
  switch (e.family()) {
    case EntropyFamily::VonNeumann:
      return vn_mode_term(s, near_pure) / e.ln_base();
    case EntropyFamily::Renyi:
      return (log_power_gap(s, e.order()) - e.order() * kLn2) / ((e.order() - 1.0) * e.ln_base());
    case EntropyFamily::Tsallis:
      return -std::expm1(log_g(s, e.order())) / (e.order() - 1.0);
  }
  return 0.0;
}

double entropy_of_state(const DensityMatrix &rho, const EntropySpec &e) {
  return entropy_discrete(spectrum(rho), e);
}

double entropy_of_state(const CovarianceMatrix &sigma, const EntropySpec &e) {
  return entropy_gaussian(symplectic_spectrum(sigma), e);
}

double tsallis_from_renyi(double renyi_value, double q, double log_base) {
  check_order(q, "tsallis_from_renyi");
  return std::expm1((1.0 - q) * renyi_value * std::log(log_base)) / (1.0 - q);
}

double derivative(DerivativeKind kind, const EntropySpec &e, int order, double point) {
  if (order != 1 && order != 2) throw InvalidArgument("derivative: order must be 1 or 2");
  const double p = e.order();
  if (kind == DerivativeKind::QubitF) {
    if (!(point > 0.0 && point <= 0.5)) {
      throw InvalidArgument("derivative: qubit point must lie in (0, 1/2]");
    }
    const double l = point;
    const double m = 1.0 - l;
    switch (e.family()) {
      case EntropyFamily::VonNeumann:
        return (order == 1 ? std::log(m / l) : -(1.0 / l + 1.0 / m)) / e.ln_base();
      case EntropyFamily::Renyi: {
        const double u = std::pow(l, p) + std::pow(m, p);
        const double a = std::pow(m, p - 1.0) - std::pow(l, p - 1.0);
        if (order == 1) return p * a / ((p - 1.0) * u * e.ln_base());
        const double cross = p * (p - 1.0) * std::pow(l, p - 2.0) * std::pow(m, p - 2.0);
        return (p * a * a - cross) / ((p - 1.0) * u * u * e.ln_base());
      }
      case EntropyFamily::Tsallis:
        if (order == 1) return p * (std::pow(m, p - 1.0) - std::pow(l, p - 1.0)) / (p - 1.0);
        return -p * (std::pow(m, p - 2.0) + std::pow(l, p - 2.0));
    }
  } else {
    if (!(point > 0.0) || !std::isfinite(point)) {
      throw InvalidArgument("derivative: shifted mode point must be positive");
    }
    const double x = point;
    const double y = x + 2.0;
    switch (e.family()) {
      case EntropyFamily::VonNeumann:
        return (order == 1 ? 0.5 * std::log1p(2.0 / x) : -1.0 / (x * y)) / e.ln_base();
      case EntropyFamily::Renyi: {
        const double v = std::pow(y, p) - std::pow(x, p);
        const double a = std::pow(y, p - 1.0) - std::pow(x, p - 1.0);
        if (order == 1) return p * a / ((p - 1.0) * v * e.ln_base());
        const double cross = 4.0 * p * (p - 1.0) * std::pow(y, p - 2.0) * std::pow(x, p - 2.0);
        return -(cross + p * a * a) / ((p - 1.0) * v * v * e.ln_base());
      }
      case EntropyFamily::Tsallis: {
        const double v = std::pow(y, p) - std::pow(x, p);
        const double v1 = p * (std::pow(y, p - 1.0) - std::pow(x, p - 1.0));
        const double scale = std::pow(2.0, p) / (p - 1.0);
        if (order == 1) return scale * v1 / (v * v);
        const double v2 = p * (p - 1.0) * (std::pow(y, p - 2.0) - std::pow(x, p - 2.0));
        return scale * (v2 * v - 2.0 * v1 * v1) / (v * v * v);
      }
    }
  }
  return 0.0;
}

MonotonicityReport monotonicity_scan(DerivativeKind kind, const EntropySpec &e,
                                     const std::vector<double> &grid) {
  MonotonicityReport report;
  report.points.reserve(grid.size());
  for (double x : grid) {
    const MonotonicityPoint pt{x, derivative(kind, e, 1, x), derivative(kind, e, 2, x)};
    if (pt.first < -kSignThreshold) report.nondecreasing = false;
    if (pt.second > kSignThreshold) {
      report.concave = false;
      report.convex_points.push_back(x);
    }
    report.points.push_back(pt);
  }
  return report;
}

}  // namespace entpoly
