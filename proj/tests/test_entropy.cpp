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

#include <cmath>

#include "gtest/gtest.h"

#include "entpoly/entropy.hpp"
#include "entpoly/error.hpp"

using namespace entpoly;

namespace {

// Reference values from a 40-digit evaluation of the defining formulas.
constexpr double kS532 = 1.4854752972273343195;
constexpr double kR2_532 = 1.3959286763311392019;
constexpr double kR15_532 = 1.4389762713971901243;
constexpr double kR3_532 = 1.3219280948873623479;
constexpr double kT15_532 = 0.78537424611036963181;
constexpr double kS532Nat = 1.0296530140645735274;

std::vector<EntropySpec> all_families() {
  return {EntropySpec::von_neumann(), EntropySpec::von_neumann(std::exp(1.0)), EntropySpec::renyi(1.5),
          EntropySpec::renyi(2.0),    EntropySpec::renyi(3.0, 10.0),           EntropySpec::tsallis(1.5),
          EntropySpec::tsallis(2.0),  EntropySpec::tsallis(3.0)};
}

double fd_check(DerivativeKind kind, const EntropySpec &e, int order, double x) {
  const double h = 1e-5;
  auto fn = [&](double y) {
    if (order == 2) return derivative(kind, e, 1, y);
    return kind == DerivativeKind::QubitF ? qubit_entropy_fn(y, e) : mode_entropy_fn(y + 1.0, e);
  };
  const double fd = (fn(x + h) - fn(x - h)) / (2 * h);
  const double exact = derivative(kind, e, order, x);
  return std::abs(fd - exact) / std::max(1.0, std::abs(exact));
}

}  // namespace

TEST(entropy_spec, parse_and_print) {
  EXPECT_EQ(EntropySpec::parse("S"), EntropySpec::von_neumann());
  EXPECT_EQ(EntropySpec::parse("S:b=e").log_base(), std::exp(1.0));
  EXPECT_EQ(EntropySpec::parse("R:p=2"), EntropySpec::renyi(2.0));
  EXPECT_EQ(EntropySpec::parse("R:p=2:b=10"), EntropySpec::renyi(2.0, 10.0));
  EXPECT_EQ(EntropySpec::parse("T:q=1.5"), EntropySpec::tsallis(1.5));
  for (const auto &e : all_families()) EXPECT_EQ(EntropySpec::parse(e.to_string()), e);
  EXPECT_EQ(EntropySpec::renyi(2.0).to_string(), "R:p=2:b=2");
  EXPECT_EQ(EntropySpec::tsallis(1.5).to_string(), "T:q=1.5");
}

TEST(entropy_spec, rejects_bad_orders) {
  EXPECT_THROW(EntropySpec::parse("R:p=0.5"), InvalidArgument);
  EXPECT_THROW(EntropySpec::parse("R:p=1"), InvalidArgument);
  EXPECT_THROW(EntropySpec::parse("T:q=1"), InvalidArgument);
  EXPECT_THROW(EntropySpec::parse("R"), InvalidArgument);
  EXPECT_THROW(EntropySpec::parse("X:p=2"), InvalidArgument);
  EXPECT_THROW(EntropySpec::parse("S:b=1"), InvalidArgument);
  EXPECT_THROW(EntropySpec::parse("R:p=abc"), InvalidArgument);
  EXPECT_THROW(EntropySpec::renyi(std::nan("")), InvalidArgument);
}

TEST(entropy_discrete, examples) {
  const std::vector<double> half{0.5, 0.5};
  EXPECT_NEAR(entropy_discrete(half, EntropySpec::von_neumann()), 1.0, 1e-15);
  EXPECT_NEAR(entropy_discrete(half, EntropySpec::tsallis(2.0)), 0.5, 1e-15);
  for (const auto &e : all_families()) EXPECT_NEAR(entropy_discrete(std::vector<double>{1.0, 0.0}, e), 0.0, 1e-15);

  const std::vector<double> v{0.5, 0.3, 0.2};
  EXPECT_NEAR(entropy_discrete(v, EntropySpec::von_neumann()), kS532, 1e-14);
  EXPECT_NEAR(entropy_discrete(v, EntropySpec::von_neumann(std::exp(1.0))), kS532Nat, 1e-14);
  EXPECT_NEAR(entropy_discrete(v, EntropySpec::renyi(2.0)), kR2_532, 1e-14);
  EXPECT_NEAR(entropy_discrete(v, EntropySpec::renyi(1.5)), kR15_532, 1e-14);
  EXPECT_NEAR(entropy_discrete(v, EntropySpec::renyi(3.0)), kR3_532, 1e-14);
  EXPECT_NEAR(entropy_discrete(v, EntropySpec::tsallis(1.5)), kT15_532, 1e-14);
  EXPECT_NEAR(entropy_discrete(v, EntropySpec::tsallis(2.0)), 0.62, 1e-14);
  EXPECT_NEAR(entropy_discrete(v, EntropySpec::tsallis(3.0)), 0.42, 1e-14);
}

TEST(entropy_discrete, rejects_invalid_spectra) {
  EXPECT_THROW(entropy_discrete(std::vector<double>{0.5, 0.6}, EntropySpec::von_neumann()), InvalidArgument);
  EXPECT_THROW(entropy_discrete(std::vector<double>{1.5, -0.5}, EntropySpec::von_neumann()), InvalidArgument);
  EXPECT_THROW(entropy_discrete(std::vector<double>{}, EntropySpec::von_neumann()), InvalidArgument);
}

TEST(entropy_gaussian, examples) {
  for (const auto &e : all_families()) EXPECT_NEAR(entropy_gaussian({{1.0, 1.0}}, e), 0.0, 1e-15);
  EXPECT_NEAR(entropy_gaussian({{3.0}}, EntropySpec::von_neumann()), 2.0, 1e-14);
  EXPECT_NEAR(entropy_gaussian({{3.0}}, EntropySpec::renyi(2.0)), std::log2(3.0), 1e-14);
  EXPECT_NEAR(entropy_gaussian({{3.0}}, EntropySpec::tsallis(2.0)), 2.0 / 3.0, 1e-14);
  // Multi-mode Tsallis is the product form, not a sum.
  EXPECT_NEAR(entropy_gaussian({{3.0, 3.0}}, EntropySpec::tsallis(2.0)), 1.0 - 1.0 / 9.0, 1e-14);
  EXPECT_THROW(entropy_gaussian({{0.5}}, EntropySpec::von_neumann()), InvalidArgument);
}

TEST(entropy_gaussian, large_and_near_pure_values_are_finite) {
  for (const auto &e : all_families()) {
    for (double s : {1.0 + 1e-14, 1.0 + 1e-9, 1e3, 1e8}) {
      const double v = entropy_gaussian({{s}}, e);
      EXPECT_TRUE(std::isfinite(v)) << e.to_string() << " s=" << s;
      EXPECT_GE(v, 0.0);
    }
  }
}

TEST(mode_functions, reference_values) {
  const double c1 = std::cosh(1.0);
  EXPECT_NEAR(mode_entropy_fn(c1, EntropySpec::von_neumann()), 0.95138951389127862569, 1e-14);
  EXPECT_NEAR(mode_entropy_fn(c1, EntropySpec::renyi(1.5)), 0.73993449829830600665, 1e-14);
  EXPECT_NEAR(mode_entropy_fn(2.5, EntropySpec::renyi(3.0)), 1.1518903740885514622, 1e-14);
  EXPECT_NEAR(mode_entropy_fn(2.5, EntropySpec::tsallis(1.5)), 0.79916903290335353745, 1e-14);
  EXPECT_NEAR(mode_entropy_fn(3.0, EntropySpec::von_neumann()), 2.0, 1e-14);
  EXPECT_NEAR(mode_entropy_fn(3.0, EntropySpec::tsallis(2.0)), 2.0 / 3.0, 1e-14);
  for (const auto &e : all_families()) EXPECT_NEAR(mode_entropy_fn(1.0, e), 0.0, 1e-15);
}

TEST(g_factor, identities) {
  EXPECT_NEAR(g_factor(3.0, 2.0), 1.0 / 3.0, 1e-15);
  for (double x : {1.5, 2.0, 3.0, 7.5}) EXPECT_NEAR(g_factor(1.0, x), 1.0, 1e-15);
  for (double s = 1.0; s <= 50.0; s += 0.25) EXPECT_NEAR(g_factor(s, 2.0), 1.0 / s, 1e-12);
}

TEST(qubit_functions, examples) {
  EXPECT_NEAR(qubit_entropy_fn(0.5, EntropySpec::von_neumann()), 1.0, 1e-15);
  for (const auto &e : all_families()) EXPECT_NEAR(qubit_entropy_fn(0.0, e), 0.0, 1e-15);
  EXPECT_NEAR(qubit_entropy_fn(0.2, EntropySpec::tsallis(2.0)), 0.32, 1e-15);
}

TEST(entropy_of_state, examples) {
  const Complex bell[] = {1, 0, 0, 1};
  const auto psi = build_state_vector(bell, DimsLayout({2, 2}));
  EXPECT_NEAR(entropy_of_state(DensityMatrix::from_pure(psi), EntropySpec::von_neumann()), 0.0, 1e-12);
  EXPECT_NEAR(entropy_of_state(partial_trace(ghz_state(3), {0, 1}), EntropySpec::von_neumann()), 1.0, 1e-12);
  EXPECT_NEAR(entropy_of_state(CovarianceMatrix(Eigen::MatrixXd::Identity(4, 4)), EntropySpec::renyi(2.0)), 0.0,
              1e-15);
}

TEST(entropy_limits, orders_approaching_one) {
  Rng rng(77);
  for (int t = 0; t < 200; ++t) {
    const auto ev = spectrum(random_density(4, 1 + t % 4, rng)).values;
    const double s = entropy_discrete(ev, EntropySpec::von_neumann(std::exp(1.0)));
    EXPECT_NEAR(entropy_discrete(ev, EntropySpec::renyi(1 + 1e-4, std::exp(1.0))), s, 1e-3);
    EXPECT_NEAR(entropy_discrete(ev, EntropySpec::tsallis(1 + 1e-4)), s, 1e-3);
    const std::vector<double> sym{1.0 + 3.0 * uniform01(rng), 1.0 + 3.0 * uniform01(rng)};
    const double sg = entropy_gaussian({sym}, EntropySpec::von_neumann(std::exp(1.0)));
    EXPECT_NEAR(entropy_gaussian({sym}, EntropySpec::renyi(1 + 1e-4, std::exp(1.0))), sg, 1e-3);
    EXPECT_NEAR(entropy_gaussian({sym}, EntropySpec::tsallis(1 + 1e-4)), sg, 1e-3);
  }
}

TEST(tsallis_from_renyi, identity) {
  Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    const auto ev = spectrum(random_density(3, 1 + t % 3, rng)).values;
    for (double q : {1.5, 2.0, 3.0}) {
      for (double b : {2.0, std::exp(1.0), 10.0}) {
        const double r = entropy_discrete(ev, EntropySpec::renyi(q, b));
        EXPECT_NEAR(tsallis_from_renyi(r, q, b), entropy_discrete(ev, EntropySpec::tsallis(q)), 1e-10);
      }
    }
  }
}

TEST(derivative, reference_values) {
  const double e = std::exp(1.0);
  EXPECT_NEAR(derivative(DerivativeKind::QubitF, EntropySpec::von_neumann(), 1, 0.5), 0.0, 1e-15);
  EXPECT_NEAR(derivative(DerivativeKind::QubitF, EntropySpec::von_neumann(e), 1, 0.2), 1.3862943611198906188,
              1e-13);
  EXPECT_NEAR(derivative(DerivativeKind::QubitF, EntropySpec::renyi(3.0, e), 2, 0.1), 1.2948020266466504035,
              1e-12);
  EXPECT_NEAR(derivative(DerivativeKind::QubitF, EntropySpec::renyi(3.0, e), 2, 1e-9), 1.5, 1e-6);
  EXPECT_NEAR(derivative(DerivativeKind::ModeGShifted, EntropySpec::tsallis(2.0), 2, 1.0), -0.25, 1e-13);
  EXPECT_NEAR(derivative(DerivativeKind::ModeGShifted, EntropySpec::tsallis(3.0), 2, 0.5),
              -0.49625725890369574704, 1e-12);
  EXPECT_NEAR(derivative(DerivativeKind::ModeGShifted, EntropySpec::renyi(2.0, e), 1, 1.0), 0.5, 1e-14);
  // Base 2 divides the natural-log derivative by ln 2.
  EXPECT_NEAR(derivative(DerivativeKind::ModeGShifted, EntropySpec::renyi(2.0), 1, 1.0), 0.5 / std::log(2.0),
              1e-14);
}

TEST(derivative, domain) {
  EXPECT_THROW(derivative(DerivativeKind::QubitF, EntropySpec::von_neumann(), 1, 0.0), InvalidArgument);
  EXPECT_THROW(derivative(DerivativeKind::QubitF, EntropySpec::von_neumann(), 1, 0.7), InvalidArgument);
  EXPECT_THROW(derivative(DerivativeKind::ModeGShifted, EntropySpec::von_neumann(), 1, 0.0), InvalidArgument);
  EXPECT_THROW(derivative(DerivativeKind::ModeGShifted, EntropySpec::von_neumann(), 3, 1.0), InvalidArgument);
}

class DerivativeFd : public ::testing::TestWithParam<std::tuple<DerivativeKind, std::string, int>> {};

TEST_P(DerivativeFd, matches_central_differences) {
  const auto [kind, spec, order] = GetParam();
  const auto e = EntropySpec::parse(spec);
  const std::vector<double> grid = kind == DerivativeKind::QubitF
                                       ? std::vector<double>{0.02, 0.05, 0.1, 0.2, 0.3, 0.4, 0.45}
                                       : std::vector<double>{0.05, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0};
  for (double x : grid) EXPECT_LT(fd_check(kind, e, order, x), 1e-6) << spec << " order " << order << " at " << x;
}

INSTANTIATE_TEST_SUITE_P(
    all, DerivativeFd,
    ::testing::Combine(::testing::Values(DerivativeKind::QubitF, DerivativeKind::ModeGShifted),
                       ::testing::Values("S", "S:b=e", "R:p=1.5", "R:p=2", "R:p=3:b=e", "T:q=1.5", "T:q=2",
                                         "T:q=3"),
                       ::testing::Values(1, 2)));

TEST(monotonicity_scan, expected_signs) {
  std::vector<double> qubit_grid, mode_grid;
  for (int i = 1; i < 50; ++i) qubit_grid.push_back(0.01 * i);
  for (int i = 1; i <= 100; ++i) mode_grid.push_back(0.1 * i);

  const auto t2 = monotonicity_scan(DerivativeKind::QubitF, EntropySpec::tsallis(2.0), qubit_grid);
  EXPECT_TRUE(t2.nondecreasing);
  EXPECT_TRUE(t2.concave);

  const auto r3 = monotonicity_scan(DerivativeKind::QubitF, EntropySpec::renyi(3.0), qubit_grid);
  EXPECT_TRUE(r3.nondecreasing);
  EXPECT_FALSE(r3.concave);
  ASSERT_FALSE(r3.convex_points.empty());
  EXPECT_NEAR(r3.convex_points.front(), 0.01, 1e-12);

  for (const char *spec : {"S", "R:p=1.5", "R:p=2", "T:q=1.5", "T:q=3"}) {
    const auto q = monotonicity_scan(DerivativeKind::QubitF, EntropySpec::parse(spec), qubit_grid);
    EXPECT_TRUE(q.nondecreasing && q.concave) << spec;
    const auto m = monotonicity_scan(DerivativeKind::ModeGShifted, EntropySpec::parse(spec), mode_grid);
    EXPECT_TRUE(m.nondecreasing && m.concave) << spec;
  }
  const auto mr3 = monotonicity_scan(DerivativeKind::ModeGShifted, EntropySpec::renyi(3.0), mode_grid);
  EXPECT_TRUE(mr3.nondecreasing && mr3.concave);
}
