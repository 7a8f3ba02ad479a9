// Copyright 2026 The polymeta Authors
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

#include <random>

#include "polymeta/aip.hpp"
#include "polymeta/group.hpp"
#include "polymeta/meta.hpp"
#include "polymeta/reductions.hpp"

namespace {

using namespace polymeta;

void BM_Hnf(benchmark::State& state) {
  const auto n = static_cast<size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> entry(-50, 50);
  MatrixZ m(n, VectorZ(n));
  for (auto& row : m)
    for (auto& x : row) x = entry(rng);
  for (auto _ : state) benchmark::DoNotOptimize(hnf(m));
}
BENCHMARK(BM_Hnf)->Arg(8)->Arg(16)->Arg(32);

void BM_EnumerateGroups(benchmark::State& state) {
  const auto n = static_cast<Element>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_groups_on_set(n));
}
BENCHMARK(BM_EnumerateGroups)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_CosetPolymorphismGraph(benchmark::State& state) {
  const Graph g = state.range(0) == 0 ? complete_graph(5) : degree_four_gadget();
  const auto red = graph_to_structure(g);
  for (auto _ : state) benchmark::DoNotOptimize(has_coset_polymorphism(red.structure));
}
BENCHMARK(BM_CosetPolymorphismGraph)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_DecomposeNae(benchmark::State& state) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(state.range(0)));
  NaeInstance phi{4, {}};
  std::uniform_int_distribution<int> var(0, 3);
  for (int c = 0; c < state.range(0); ++c) phi.clauses.push_back({var(rng), var(rng), var(rng)});
  const Graph g = nae3sat_to_graph(phi);
  Limits limits;
  limits.decompose_vertices = 64;
  for (auto _ : state) benchmark::DoNotOptimize(decompose_matching_bipartite(g, limits));
}
BENCHMARK(BM_DecomposeNae)->Arg(2)->Arg(4)->Arg(6);

void BM_AbelianHeapPipeline(benchmark::State& state) {
  const auto d = static_cast<Element>(state.range(0));
  RelationalStructure b(d);
  auto& r = b.add_relation("R", 2);
  for (Element x = 0; x < d; ++x) r.add({x, static_cast<Element>((x + 1) % d)});
  for (auto _ : state) benchmark::DoNotOptimize(pmeta_abheap_maltsev(b));
}
BENCHMARK(BM_AbelianHeapPipeline)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_AipCycle(benchmark::State& state) {
  const auto n = static_cast<Element>(state.range(0));
  RelationalStructure a(n), b(3);
  auto& ra = a.add_relation("R", 2);
  for (Element x = 0; x < n; ++x) ra.add({x, static_cast<Element>((x + 1) % n)});
  auto& rb = b.add_relation("R", 2);
  for (Element x = 0; x < 3; ++x) rb.add({x, static_cast<Element>((x + 1) % 3)});
  for (auto _ : state) benchmark::DoNotOptimize(aip_decide(a, b));
}
BENCHMARK(BM_AipCycle)->Arg(30)->Arg(300);

}  // namespace

BENCHMARK_MAIN();
