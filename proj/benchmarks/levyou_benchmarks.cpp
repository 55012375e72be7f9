// Copyright 2026 The levyou Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <cmath>

#include "levyou/estimators.hpp"
#include "levyou/levy.hpp"
#include "levyou/monte_carlo.hpp"
#include "levyou/ou.hpp"
#include "levyou/rng.hpp"

namespace levyou {
namespace {

void BM_Normal(benchmark::State& state) {
  RngStream rng(1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(rng.normal());
}
BENCHMARK(BM_Normal);

void BM_CompoundPoissonIncrement(benchmark::State& state) {
  RngStream rng(1, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        sample_compound_poisson_increment(rng, 5.0, std::sqrt(2.0), 0.01).total);
  }
}
BENCHMARK(BM_CompoundPoissonIncrement);

void BM_GammaIncrement(benchmark::State& state) {
  RngStream rng(1, 2);
  const double dt = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_gamma_increment(rng, 1.0, 1.0, dt));
  }
}
BENCHMARK(BM_GammaIncrement)->Arg(1)->Arg(100)->Arg(10000);

OuModel model_for(int family) {
  switch (family) {
    case 0:
      return OuModel(2.0, 0.0, LevyModel(1.0));
    case 1:
      return OuModel(2.0, 0.0, LevyModel(1.0, CompoundPoisson{5.0, std::sqrt(2.0)}));
    default:
      return OuModel(2.0, 0.0, LevyModel(1.0, GammaJumps{1.0, 1.0}));
  }
}

void BM_SimulatePath(benchmark::State& state) {
  const auto model = model_for(static_cast<int>(state.range(0)));
  const ObservationGrid grid(static_cast<std::size_t>(state.range(1)), 0.005);
  std::uint64_t r = 0;
  for (auto _ : state) {
    RngStream rng(2, r++);
    benchmark::DoNotOptimize(simulate_path(model, grid, rng).x.back());
  }
  state.SetItemsProcessed(state.iterations() * state.range(1));
}
BENCHMARK(BM_SimulatePath)
    ->ArgNames({"family", "n"})
    ->Args({0, 4000})
    ->Args({1, 4000})
    ->Args({2, 4000});

void BM_FilteredMle(benchmark::State& state) {
  RngStream rng(3, 0);
  const auto path = simulate_path(
      model_for(1), ObservationGrid(static_cast<std::size_t>(state.range(0)), 0.005),
      rng);
  const auto filter = FilterSpec::exponent();
  for (auto _ : state) {
    benchmark::DoNotOptimize(jump_filtered_mle(path, filter).a_hat);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_FilteredMle)->Arg(4000)->Arg(70000);

void BM_Campaign(benchmark::State& state) {
  const McConfig config{model_for(1), ObservationGrid(2000, 0.01),
                        FilterSpec::exponent(), 100, 4,
                        {EstimatorKind::kFilteredMle,
                         EstimatorKind::kLeastSquares}};
  const auto workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_campaign(config, workers).per_estimator[0].mean);
  }
}
BENCHMARK(BM_Campaign)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace levyou

BENCHMARK_MAIN();
