// Copyright 2026 The Supertoken Authors
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

// Serial vs OpenMP kernels. Run with --benchmark_filter=Adjacency etc.

#include <benchmark/benchmark.h>

#include "supertoken/graph.hpp"
#include "supertoken/kernels.hpp"
#include "supertoken/tokens.hpp"

namespace {

using namespace supertoken;

// C_n with k = 3 tokens: C(n+2, 3) configurations.
void BM_AdjacencySerial(benchmark::State& state) {
  const Graph base = MakeCycle(static_cast<int>(state.range(0)));
  const ConfigSpace space(base.num_vertices(), 3, ConfigSpace::Kind::kMultisets);
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::TokenMoveAdjacencySerial(base, space));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(space.size()));
}

void BM_AdjacencyParallel(benchmark::State& state) {
  const Graph base = MakeCycle(static_cast<int>(state.range(0)));
  const ConfigSpace space(base.num_vertices(), 3, ConfigSpace::Kind::kMultisets);
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::TokenMoveAdjacencyParallel(base, space));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(space.size()));
  state.counters["threads"] = kernels::MaxThreads();
}

void BM_EccentricitiesSerial(benchmark::State& state) {
  const Graph g = SupertokenGraph(MakeCycle(static_cast<int>(state.range(0))), 2);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::EccentricitiesSerial(g));
  state.SetItemsProcessed(state.iterations() * g.num_vertices());
}

void BM_EccentricitiesParallel(benchmark::State& state) {
  const Graph g = SupertokenGraph(MakeCycle(static_cast<int>(state.range(0))), 2);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::EccentricitiesParallel(g));
  state.SetItemsProcessed(state.iterations() * g.num_vertices());
  state.counters["threads"] = kernels::MaxThreads();
}

}  // namespace

BENCHMARK(BM_AdjacencySerial)->Arg(20)->Arg(40)->Arg(60);
BENCHMARK(BM_AdjacencyParallel)->Arg(20)->Arg(40)->Arg(60);
BENCHMARK(BM_EccentricitiesSerial)->Arg(20)->Arg(40);
BENCHMARK(BM_EccentricitiesParallel)->Arg(20)->Arg(40);

BENCHMARK_MAIN();
