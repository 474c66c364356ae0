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

#include "entpoly/error.hpp"
#include "entpoly/relations.hpp"

using namespace entpoly;

namespace {

constexpr double kMiR2 = -0.05366013315960133944;
constexpr double kMiR3 = -0.13301844699765862326;
constexpr double kWSlackP3 = -0.00021616493262008678784;

StateVector bell() {
  const Complex a[] = {1, 0, 0, 1};
  return build_state_vector(a, DimsLayout({2, 2}));
}

StateVector w_state(double a1sq, int n) {
  std::vector<double> amps{std::sqrt(a1sq)};
  for (int k = 1; k < n; ++k) amps.push_back(std::sqrt((1 - a1sq) / (n - 1)));
  return w_class_state(amps);
}

CovarianceMatrix tmsv_plus_vacuum(double r) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(6, 6);
  m.topLeftCorner(4, 4) = two_mode_squeezed(r).entries();
  return CovarianceMatrix(m);
}

}  // namespace

TEST(one_to_rest, examples) {
  const auto ghz = one_to_rest(ghz_state(3), EntropySpec::von_neumann());
  for (double v : ghz.values) EXPECT_NEAR(v, 1.0, 1e-12);

  const Complex prod[] = {1, 0, 0, 0, 0, 0, 0, 0};
  for (double v : one_to_rest(build_state_vector(prod, DimsLayout({2, 2, 2})), EntropySpec::renyi(2.0)).values) {
    EXPECT_NEAR(v, 0.0, 1e-12);
  }
  for (const char *spec : {"S", "R:p=1.5", "T:q=3"}) {
    const auto t = one_to_rest(two_mode_squeezed(0.5), ModePartition({1, 1}), EntropySpec::parse(spec));
    EXPECT_NEAR(t.values[0], t.values[1], 1e-10);
  }
}

TEST(one_to_rest, rejects_mixed_inputs) {
  const Eigen::MatrixXcd half = Eigen::MatrixXcd::Identity(4, 4) * 0.25;
  EXPECT_THROW(one_to_rest(DensityMatrix(half, DimsLayout({2, 2})), EntropySpec::von_neumann()), InvalidArgument);
  EXPECT_THROW(one_to_rest(CovarianceMatrix(3 * Eigen::MatrixXd::Identity(4, 4)), ModePartition({1, 1}),
                           EntropySpec::von_neumann()),
               InvalidArgument);
  EXPECT_NO_THROW(one_to_rest(DensityMatrix::from_pure(ghz_state(3)), EntropySpec::von_neumann()));
}

TEST(polygon_check, arithmetic) {
  const std::vector<double> ones{1, 1, 1};
  const auto r = polygon_slacks(ones, 1e-9);
  EXPECT_TRUE(r.holds);
  EXPECT_DOUBLE_EQ(r.min_slack, 1.0);

  const std::vector<double> bad{3, 1, 1};
  const auto b = polygon_slacks(bad, 1e-9);
  EXPECT_FALSE(b.holds);
  EXPECT_DOUBLE_EQ(b.min_slack, -1.0);
  EXPECT_EQ(b.worst_party, 0u);
  EXPECT_THROW(polygon_slacks(std::vector<double>{1.0}, 1e-9), InvalidArgument);
}

TEST(polygon_check, w_class_renyi3_violates) {
  const auto v = one_to_rest(w_state(0.98, 3), EntropySpec::renyi(3.0));
  const auto r = polygon_check(v);
  EXPECT_FALSE(r.holds);
  EXPECT_NEAR(r.min_slack, kWSlackP3, 1e-12);
  EXPECT_EQ(r.worst_party, 0u);
}

TEST(subadditivity_check, examples) {
  for (const auto &e : {EntropySpec::von_neumann(), EntropySpec::renyi(3.0), EntropySpec::tsallis(2.0)}) {
    const auto r = subadditivity_check(DensityMatrix::from_pure(bell()), {0}, e);
    EXPECT_NEAR(r.e_ab, 0.0, 1e-12);
    EXPECT_TRUE(r.holds);
  }
  EXPECT_NEAR(mutual_information(DensityMatrix::from_pure(bell()), {0}, EntropySpec::von_neumann()), 2.0, 1e-12);

  const Eigen::MatrixXcd prod = Eigen::MatrixXcd::Identity(4, 4) * 0.25;
  EXPECT_NEAR(mutual_information(DensityMatrix(prod, DimsLayout({2, 2})), {0}, EntropySpec::renyi(2.0)), 0.0,
              1e-14);
}

TEST(subadditivity_check, diagonal_counterexample) {
  const auto rho = renyi_counterexample_state(DimsLayout({2, 2}));
  const auto r2 = subadditivity_check(rho, {0}, EntropySpec::renyi(2.0));
  EXPECT_FALSE(r2.holds);
  EXPECT_NEAR(r2.mutual_information, kMiR2, 1e-13);
  EXPECT_NEAR(subadditivity_check(rho, {0}, EntropySpec::renyi(3.0)).mutual_information, kMiR3, 1e-13);
  EXPECT_NEAR(subadditivity_check(rho, {0}, EntropySpec::von_neumann()).mutual_information, 0.1177436968907206466,
              1e-13);
  EXPECT_NEAR(subadditivity_check(rho, {0}, EntropySpec::tsallis(2.0)).mutual_information, 0.12, 1e-13);

  const auto &m = rho.entries();
  EXPECT_NEAR((m * m).trace().real(), 0.38, 1e-12);
  const auto a = partial_trace(rho, {0}).entries();
  const auto b = partial_trace(rho, {1}).entries();
  EXPECT_NEAR((a * a).trace().real() * (b * b).trace().real(), 0.3944, 1e-12);

  // Embedded in larger local dimensions, the numbers do not change.
  EXPECT_NEAR(mutual_information(renyi_counterexample_state(DimsLayout({3, 3})), {0}, EntropySpec::renyi(2.0)),
              kMiR2, 1e-13);
}

TEST(subadditivity_check, gaussian_campaign_sample) {
  Rng rng(2024);
  for (int t = 0; t < 500; ++t) {
    const auto sigma = random_cm(2, CmKind::Mixed, rng);
    for (const char *spec : {"S", "R:p=1.5", "R:p=3", "T:q=1.5", "T:q=3"}) {
      EXPECT_TRUE(subadditivity_check(sigma, ModePartition({1, 1}), EntropySpec::parse(spec)).holds) << spec;
    }
  }
}

TEST(qubit_marginal_check, examples) {
  const auto g = qubit_marginal_check(smallest_marginal_eigenvalues(ghz_state(3)));
  EXPECT_TRUE(g.holds);
  EXPECT_NEAR(g.min_slack, 0.5, 1e-14);

  for (double a1sq : {0.5, 0.7, 0.98}) {
    const auto w = qubit_marginal_check(smallest_marginal_eigenvalues(w_state(a1sq, 4)));
    EXPECT_NEAR(w.slacks[0], 0.0, 1e-12);
    EXPECT_TRUE(w.holds);
  }
  Rng rng(10);
  for (int t = 0; t < 300; ++t) {
    EXPECT_TRUE(qubit_marginal_check(smallest_marginal_eigenvalues(haar_random_pure(DimsLayout({2, 2, 2, 2}), rng)))
                    .holds);
  }
}

TEST(gaussian_marginal_check, examples) {
  const std::vector<double> vac{1, 1, 1};
  const auto v = gaussian_marginal_check(vac);
  EXPECT_TRUE(v.holds);
  for (double s : v.slacks) EXPECT_EQ(s, 0.0);

  const double c = std::cosh(1.0);
  const std::vector<double> tm{c, c};
  const auto t = gaussian_marginal_check(tm);
  EXPECT_NEAR(t.min_slack, 0.0, 1e-14);

  const std::vector<double> bad{3.0, 1.0, 1.5};
  EXPECT_FALSE(gaussian_marginal_check(bad).holds);
}

TEST(weak_majorization, examples) {
  const std::vector<double> x{2, 2}, y{1, 3};
  EXPECT_TRUE(weak_majorization(x, x));
  EXPECT_TRUE(weak_majorization(x, y));
  EXPECT_FALSE(weak_majorization(y, x));
  EXPECT_DOUBLE_EQ(weak_majorization_slack(x, y), 0.0);

  Rng rng(12);
  for (int t = 0; t < 300; ++t) {
    const auto sigma = random_cm(1 + t % 4, CmKind::Mixed, rng);
    EXPECT_TRUE(weak_majorization(diagonal_pair_vector(sigma), symplectic_spectrum(sigma).values, 1e-9));
  }
}

TEST(lemma1_check, concave_and_convex_functions) {
  const std::vector<double> lam{0.02, 0.01, 0.01};
  const auto t2 = [](double l) { return qubit_entropy_fn(l, EntropySpec::tsallis(2.0)); };
  const auto r3 = [](double l) { return qubit_entropy_fn(l, EntropySpec::renyi(3.0)); };
  EXPECT_TRUE(lemma1_check([](double x) { return x; }, lam));
  EXPECT_TRUE(lemma1_check(t2, lam));
  EXPECT_FALSE(lemma1_check(r3, lam));
  const std::vector<double> bad{0.5, 0.1, 0.1};
  EXPECT_THROW(lemma1_check(t2, bad), InvalidArgument);

  Rng rng(13);
  for (int t = 0; t < 200; ++t) {
    const auto l = smallest_marginal_eigenvalues(haar_random_pure(DimsLayout({2, 2, 2}), rng));
    EXPECT_TRUE(lemma1_check(t2, l));
  }
}

TEST(wstate_violation, finds_witness) {
  const auto f = wstate_violation(3.0, 3, default_wclass_grid());
  ASSERT_TRUE(f.witness.has_value());
  EXPECT_LT(f.points[*f.witness].polygon.min_slack, -1e-6);
  EXPECT_NEAR(f.points.back().polygon.min_slack, kWSlackP3, 1e-12);
  EXPECT_GT(f.points.front().polygon.min_slack, 0.0);
  EXPECT_THROW(wstate_violation(1.5, 3, default_wclass_grid()), InvalidArgument);
  EXPECT_THROW(wstate_violation(3.0, 2, default_wclass_grid()), InvalidArgument);
}

TEST(transform_polygon, examples) {
  const auto ghz = one_to_rest(ghz_state(3), EntropySpec::von_neumann());
  const auto id = transform_polygon(ghz, identity_transform());
  const auto direct = polygon_check(ghz);
  EXPECT_EQ(id.slacks, direct.slacks);
  EXPECT_TRUE(transform_polygon(ghz, sqrt_transform()).holds);

  Rng rng(14);
  for (int t = 0; t < 50; ++t) {
    const auto psi = haar_random_pure(DimsLayout({2, 3, 2}), rng);
    for (double q : {1.5, 2.0, 3.0}) {
      const auto r = one_to_rest(psi, EntropySpec::renyi(q));
      const auto tv = one_to_rest(psi, EntropySpec::tsallis(q));
      const auto f = tsallis_from_renyi_transform(q, 2.0);
      for (std::size_t i = 0; i < r.values.size(); ++i) EXPECT_NEAR(f.fn(r.values[i]), tv.values[i], 1e-9);
    }
  }
  const MonotoneTransform convex{"square", [](double x) { return x * x; }};
  EXPECT_THROW(transform_polygon(ghz, convex), InvalidArgument);
}

TEST(purified_equivalence, examples) {
  const auto pure = purified_equivalence_demo(DensityMatrix::from_pure(bell()), EntropySpec::von_neumann());
  EXPECT_TRUE(pure.equivalent);
  EXPECT_NEAR(pure.ancilla_slack, 2.0, 1e-10);

  const auto cx = purified_equivalence_demo(renyi_counterexample_state(DimsLayout({2, 2})), EntropySpec::renyi(2.0));
  EXPECT_TRUE(cx.equivalent);
  EXPECT_NEAR(cx.ancilla_slack, kMiR2, 1e-10);
  EXPECT_NEAR(cx.subadditivity.mutual_information, kMiR2, 1e-12);

  Rng rng(15);
  for (int t = 0; t < 50; ++t) {
    const auto r = purified_equivalence_demo(random_density(DimsLayout({2, 2}), 2, rng), EntropySpec::tsallis(2.0));
    EXPECT_TRUE(r.equivalent);
    EXPECT_GE(r.ancilla_slack, -1e-9);
  }
  for (int t = 0; t < 50; ++t) {
    const auto g = purified_equivalence_demo(random_cm(2, CmKind::Mixed, rng), ModePartition({1, 1}),
                                             EntropySpec::renyi(2.0));
    EXPECT_TRUE(g.equivalent);
    EXPECT_LT(g.difference, 1e-9);
  }
}

TEST(theorem2_proof_trace, vacuum_links_are_tight) {
  const auto t = theorem2_proof_trace(CovarianceMatrix(Eigen::MatrixXd::Identity(6, 6)), ModePartition({1, 1, 1}),
                                      EntropySpec::tsallis(2.0));
  EXPECT_TRUE(t.holds);
  for (const auto &p : t.parties) {
    for (const auto &link : p.links) EXPECT_NEAR(link.slack, 0.0, 1e-12) << link.name;
  }
}

TEST(theorem2_proof_trace, random_pure_states) {
  Rng rng(16);
  for (int t = 0; t < 100; ++t) {
    const bool split = t % 2;
    const auto sigma = random_cm(split ? 4 : 3, CmKind::Pure, rng);
    const ModePartition part(split ? std::vector<int>{2, 1, 1} : std::vector<int>{1, 1, 1});
    for (const char *spec : {"S", "R:p=1.5", "R:p=3", "T:q=1.5", "T:q=3"}) {
      const auto tr = theorem2_proof_trace(sigma, part, EntropySpec::parse(spec));
      EXPECT_TRUE(tr.holds) << spec << " sample " << t;
      EXPECT_EQ(tr.parties.size(), 3u);
    }
  }
}

TEST(theorem2_proof_trace, tmsv_plus_vacuum) {
  for (const char *spec : {"S", "R:p=1.5", "T:q=1.5"}) {
    const auto t = theorem2_proof_trace(tmsv_plus_vacuum(0.6), ModePartition({1, 1, 1}), EntropySpec::parse(spec));
    EXPECT_TRUE(t.holds) << spec;
    EXPECT_GE(t.min_slack, -1e-8);
  }
  EXPECT_THROW(theorem2_proof_trace(CovarianceMatrix(3 * Eigen::MatrixXd::Identity(6, 6)), ModePartition({1, 1, 1}),
                                    EntropySpec::von_neumann()),
               InvalidArgument);
}

TEST(ghz_monogamy_demo, values) {
  const auto s = ghz_monogamy_demo(EntropySpec::von_neumann());
  EXPECT_NEAR(s.e_ab, 1.0, 1e-12);
  EXPECT_NEAR(s.e_a_given_bc, 1.0, 1e-12);
  EXPECT_NEAR(s.e_b + s.e_c, 2.0, 1e-12);
  EXPECT_TRUE(s.polygon_holds);
  EXPECT_TRUE(s.e_ab_positive);
  EXPECT_FALSE(s.analytic_note.empty());
  EXPECT_NEAR(ghz_monogamy_demo(EntropySpec::tsallis(2.0)).e_ab, 0.5, 1e-12);
}

TEST(subadditivity_chain, reproduces_polygon_slack) {
  Rng rng(18);
  for (int t = 0; t < 50; ++t) {
    const auto psi = haar_random_pure(DimsLayout({2, 2, 3, 2}), rng);
    for (const auto &e : {EntropySpec::von_neumann(), EntropySpec::tsallis(2.0)}) {
      const auto chain = subadditivity_chain(psi, e);
      for (std::size_t k = 1; k < chain.size(); ++k) EXPECT_GE(chain[k] - chain[k - 1], -1e-9);
      const auto slack = polygon_check(one_to_rest(psi, e)).slacks.back();
      EXPECT_NEAR(chain.back() - chain.front(), slack, 1e-9);
    }
  }
  EXPECT_THROW(subadditivity_chain(bell(), EntropySpec::von_neumann()), InvalidArgument);
}
