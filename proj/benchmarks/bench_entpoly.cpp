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

#include <benchmark/benchmark.h>

#include "entpoly/campaign.hpp"
#include "entpoly/discrete.hpp"
#include "entpoly/gaussian.hpp"
#include "entpoly/relations.hpp"

using namespace entpoly;

static void BM_williamson(benchmark::State &state) {
  Rng rng(1);
  const auto sigma = random_cm(static_cast<int>(state.range(0)), CmKind::Mixed, rng);
  for (auto _ : state) benchmark::DoNotOptimize(williamson(sigma));
}
BENCHMARK(BM_williamson)->DenseRange(1, 4);

static void BM_symplectic_spectrum(benchmark::State &state) {
  Rng rng(2);
  const auto sigma = random_cm(static_cast<int>(state.range(0)), CmKind::Mixed, rng);
  for (auto _ : state) benchmark::DoNotOptimize(symplectic_spectrum(sigma));
}
BENCHMARK(BM_symplectic_spectrum)->DenseRange(1, 4);

static void BM_partial_trace_density(benchmark::State &state) {
  Rng rng(3);
  const int n = static_cast<int>(state.range(0));
  const auto rho = DensityMatrix::from_pure(haar_random_pure(DimsLayout(std::vector<int>(n, 2)), rng));
  for (auto _ : state) benchmark::DoNotOptimize(partial_trace(rho, {0}));
}
BENCHMARK(BM_partial_trace_density)->DenseRange(2, 6);

static void BM_partial_trace_vector(benchmark::State &state) {
  Rng rng(4);
  const int n = static_cast<int>(state.range(0));
  const auto psi = haar_random_pure(DimsLayout(std::vector<int>(n, 2)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(partial_trace(psi, {0}));
}
BENCHMARK(BM_partial_trace_vector)->DenseRange(2, 10, 2);

static void BM_theorem2_trace(benchmark::State &state) {
  Rng rng(5);
  const auto sigma = random_cm(4, CmKind::Pure, rng);
  const ModePartition partition({2, 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(theorem2_proof_trace(sigma, partition, EntropySpec::tsallis(2.0)));
}
BENCHMARK(BM_theorem2_trace);

static void BM_campaign_qubit_polygon(benchmark::State &state) {
  CampaignConfig c;
  c.system = QubitSystem{static_cast<int>(state.range(0))};
  c.relation = Relation::Polygon;
  c.specs = {EntropySpec::von_neumann(), EntropySpec::renyi(2.0), EntropySpec::tsallis(2.0)};
  c.samples = 1000;
  for (auto _ : state) benchmark::DoNotOptimize(run_campaign(c));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(c.samples));
}
BENCHMARK(BM_campaign_qubit_polygon)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_campaign_gaussian_polygon(benchmark::State &state) {
  CampaignConfig c;
  c.system = GaussianSystem{{2, 1, 1}};
  c.relation = Relation::Polygon;
  c.specs = {EntropySpec::von_neumann(), EntropySpec::renyi(3.0), EntropySpec::tsallis(3.0)};
  c.samples = 1000;
  for (auto _ : state) benchmark::DoNotOptimize(run_campaign(c));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(c.samples));
}
BENCHMARK(BM_campaign_gaussian_polygon)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
