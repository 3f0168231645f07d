// Copyright 2026 The qsd authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <cstdint>

#include "qsd/bounds.hpp"
#include "qsd/compare.hpp"
#include "qsd/exact.hpp"
#include "qsd/random.hpp"
#include "qsd/spectral.hpp"

namespace {

qsd::ComplexMatrix random_hermitian(std::uint64_t seed, std::size_t dim) {
  qsd::Rng rng(seed);
  return qsd::symmetrized(qsd::random_ginibre(rng, dim));
}

void BM_hermitian_eig(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const qsd::ComplexMatrix h = random_hermitian(11, dim);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qsd::hermitian_eig(h));
  }
}
BENCHMARK(BM_hermitian_eig)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_fidelity(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  qsd::Rng rng(12);
  const qsd::ComplexMatrix rho = qsd::random_density(rng, dim);
  const qsd::ComplexMatrix sigma = qsd::random_density(rng, dim);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qsd::fidelity(rho, sigma));
  }
}
BENCHMARK(BM_fidelity)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_all_bounds(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const qsd::Ensemble e = qsd::random_ensemble(13, 3, dim);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qsd::all_bounds(e));
  }
}
BENCHMARK(BM_all_bounds)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_solve_commuting(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const qsd::Ensemble e = qsd::random_commuting_ensemble(14, 4, dim);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qsd::solve_commuting(e));
  }
}
BENCHMARK(BM_solve_commuting)->Arg(4)->Arg(8)->Arg(16);

void BM_sweep_100_trials(benchmark::State& state) {
  qsd::SweepConfig cfg;
  cfg.seed = 15;
  cfg.trials = 100;
  cfg.m = 3;
  cfg.dim = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qsd::run_sweep(cfg));
  }
}
BENCHMARK(BM_sweep_100_trials)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
