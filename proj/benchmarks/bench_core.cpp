// Copyright 2025-2026 The hierarchy-lab developers
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

#include "hlab/analysis.hpp"

namespace {

void BM_EntryMul(benchmark::State& state) {
  const hlab::CycEntry x = hlab::CycEntry::root_power(1) + hlab::CycEntry::dyadic(3, 2);
  const hlab::CycEntry y = hlab::CycEntry::root_power(3) - hlab::CycEntry::dyadic(5, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(x * y);
  }
}
BENCHMARK(BM_EntryMul);

void BM_Matmul2Q(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const hlab::Gate a = hlab::random_gate_word(2, 12, rng).gate;
  const hlab::Gate b = hlab::random_gate_word(2, 12, rng).gate;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hlab::matmul(a, b));
  }
}
BENCHMARK(BM_Matmul2Q);

void BM_PauliCheck(benchmark::State& state) {
  const hlab::Gate g = hlab::tensor(hlab::gates::Z(), hlab::gates::X());
  for (auto _ : state) {
    benchmark::DoNotOptimize(hlab::pauli_check(g));
  }
}
BENCHMARK(BM_PauliCheck);

void BM_CanonicalForm(benchmark::State& state) {
  std::mt19937_64 rng(11);
  const hlab::Gate g = hlab::random_gate_word(2, 10, rng).gate;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hlab::canonical_form(g));
  }
}
BENCHMARK(BM_CanonicalForm);

void BM_LevelOfT(benchmark::State& state) {
  const hlab::Gate t = hlab::gates::T();
  for (auto _ : state) {
    hlab::LevelDecider decider;
    benchmark::DoNotOptimize(decider.level(t, 4));
  }
}
BENCHMARK(BM_LevelOfT);

void BM_LevelOfControlledT(benchmark::State& state) {
  const hlab::Gate ct = hlab::controlled(hlab::gates::T());
  for (auto _ : state) {
    hlab::LevelDecider decider;
    benchmark::DoNotOptimize(decider.level(ct, 5));
  }
}
BENCHMARK(BM_LevelOfControlledT);

}  // namespace

BENCHMARK_MAIN();
