// Copyright 2026 The fairdec Authors
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

#include <random>

#include <benchmark/benchmark.h>

#include "fairdec/generators.hpp"
#include "fairdec/mechanisms.hpp"
#include "fairdec/oracles.hpp"
#include "fairdec/private_goods.hpp"

namespace fairdec {
namespace {

DecisionInstance bench_public(std::size_t n, std::size_t m) {
  std::mt19937_64 rng(42 + n * 100 + m);
  return random_public_instance(n, m, 3, 0, 5, rng);
}

void BM_MnwBranchAndBound(benchmark::State& state) {
  const auto inst = bench_public(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(max_nash_welfare(inst));
}
BENCHMARK(BM_MnwBranchAndBound)->Args({3, 6})->Args({4, 8})->Args({4, 10});

void BM_NashEnumeration(benchmark::State& state) {
  const auto inst = bench_public(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(exact_optimum(inst, Objective::kNash));
}
BENCHMARK(BM_NashEnumeration)->Args({3, 6})->Args({4, 8})->Args({4, 10});

void BM_Leximin(benchmark::State& state) {
  const auto inst = bench_public(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(leximin(inst));
}
BENCHMARK(BM_Leximin)->Args({3, 6})->Args({4, 8})->Args({4, 10});

void BM_PpsPoAllocate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = static_cast<std::size_t>(state.range(1));
  std::mt19937_64 rng(7 + n * 1000 + m);
  const auto goods = random_goods_instance(n, m, 1, 10, rng);
  for (auto _ : state) benchmark::DoNotOptimize(pps_po_allocate(goods));
}
BENCHMARK(BM_PpsPoAllocate)->Args({3, 30})->Args({6, 60})->Args({10, 120})->Args({20, 240});

}  // namespace
}  // namespace fairdec

BENCHMARK_MAIN();
