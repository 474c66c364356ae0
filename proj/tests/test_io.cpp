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

#include <filesystem>

#include "gtest/gtest.h"

#include "entpoly/error.hpp"
#include "entpoly/io.hpp"

using namespace entpoly;
using nlohmann::json;

TEST(io, state_vector_round_trip_is_exact) {
  Rng rng(1);
  for (int t = 0; t < 100; ++t) {
    const std::vector<int> dims = t % 2 ? std::vector<int>{2, 3} : std::vector<int>{2, 2, 2};
    const auto psi = haar_random_pure(DimsLayout(dims), rng);
    const json j = json::parse(dump_sorted(to_json(psi)));
    const auto back = state_vector_from_json(j);
    EXPECT_EQ(back.amplitudes(), psi.amplitudes());
    EXPECT_EQ(back.layout(), psi.layout());
    EXPECT_EQ(dump_sorted(to_json(back)), dump_sorted(j));
  }
}

TEST(io, density_matrix_round_trip_is_exact) {
  Rng rng(2);
  for (int t = 0; t < 100; ++t) {
    const auto rho = random_density(DimsLayout({2, 3}), 1 + t % 6, rng);
    const auto back = density_matrix_from_json(json::parse(dump_sorted(to_json(rho))));
    EXPECT_EQ(back.entries(), rho.entries());
  }
}

TEST(io, covariance_round_trip_is_exact) {
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    const auto sigma = random_cm(1 + t % 4, t % 2 ? CmKind::Mixed : CmKind::Pure, rng);
    const auto back = covariance_from_json(json::parse(dump_sorted(to_json(sigma))));
    EXPECT_EQ(back.entries(), sigma.entries());
  }
}

TEST(io, dispatch_on_shape) {
  const auto psi = ghz_state(3);
  EXPECT_TRUE(std::holds_alternative<StateVector>(state_from_json(to_json(psi))));
  EXPECT_TRUE(std::holds_alternative<DensityMatrix>(state_from_json(to_json(DensityMatrix::from_pure(psi)))));
  EXPECT_TRUE(std::holds_alternative<CovarianceMatrix>(state_from_json(to_json(two_mode_squeezed(0.3)))));
}

TEST(io, malformed_inputs) {
  EXPECT_THROW(state_from_json(json::parse(R"({"dims":[2],"re":[1,0,0]})")), InvalidArgument);
  EXPECT_THROW(state_from_json(json::parse(R"({"dims":[2],"re":[1,0,0],"im":[0,0,0]})")), InvalidArgument);
  EXPECT_THROW(covariance_from_json(json::parse(R"({"n_modes":1,"rows":[[1,0]]})")), InvalidArgument);
  EXPECT_THROW(covariance_from_json(json::parse(R"({"n_modes":1,"rows":[[0.5,0],[0,0.5]]})")), InvalidArgument);
  EXPECT_THROW(state_from_json(json::parse("[1,2]")), InvalidArgument);
}

TEST(io, unnormalized_vector_is_normalized) {
  const auto psi = state_vector_from_json(json::parse(R"({"dims":[2],"re":[1,1],"im":[0,0]})"));
  EXPECT_NEAR(psi.amplitudes().norm(), 1.0, 1e-15);
}

TEST(io, keys_are_sorted) {
  const json j = {{"zeta", 1}, {"alpha", 2}, {"mid", {{"b", 1}, {"a", 2}}}};
  EXPECT_EQ(dump_sorted(j), "{\n  \"alpha\": 2,\n  \"mid\": {\n    \"a\": 2,\n    \"b\": 1\n  },\n  \"zeta\": 1\n}\n");
}

TEST(io, file_round_trip) {
  const auto path = std::filesystem::temp_directory_path() / "entpoly_io_test.json";
  write_text_file(path, dump_sorted(to_json(ghz_state(2))));
  EXPECT_EQ(state_vector_from_json(read_json_file(path)).amplitudes(), ghz_state(2).amplitudes());
  std::filesystem::remove(path);
  EXPECT_ANY_THROW(read_json_file(path));
  EXPECT_ANY_THROW(write_text_file("/nonexistent_dir/x.json", "{}"));
}
