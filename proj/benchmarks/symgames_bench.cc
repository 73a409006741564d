// Copyright 2026 The symgames Authors
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

#include <random>
#include <vector>

#include "symgames/analytic.h"
#include "symgames/clique.h"
#include "symgames/gadgets.h"
#include "symgames/geometry.h"
#include "symgames/minmax.h"
#include "symgames/oracle.h"

namespace symgames {
namespace {

RationalMatrix RandomSource(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-10, 10);
  RationalMatrix r(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) r(i, j) = Fraction(d(rng), 10);
  }
  return r;
}

void BM_ProjectSimplex(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> d;
  std::vector<double> v(state.range(0));
  for (double& e : v) e = d(rng);
  for (auto _ : state) benchmark::DoNotOptimize(ProjectSimplexValues(v));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ProjectSimplex)->RangeMultiplier(4)->Range(4, 4096);

void BM_ProjectJoint(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(2);
  std::normal_distribution<double> d;
  std::vector<double> x(n), y(n);
  for (int i = 0; i < n; ++i) {
    x[i] = d(rng);
    y[i] = d(rng);
  }
  const JointDomain domain(n, 0.05);
  for (auto _ : state) benchmark::DoNotOptimize(ProjectJoint(x, y, domain));
}
BENCHMARK(BM_ProjectJoint)->Arg(2)->Arg(8)->Arg(32)->Arg(128);

void BM_GdaMapCoupled(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(3);
  const auto problem = CoupledGadget(RandomSource(n, rng), 0.1);
  const MixedStrategy u = MixedStrategy::Uniform(n);
  for (auto _ : state) benchmark::DoNotOptimize(GdaMap(problem, u, u, 0.1));
}
BENCHMARK(BM_GdaMapCoupled)->Arg(2)->Arg(8)->Arg(32);

void BM_SymmetricSupportEnumeration(benchmark::State& state) {
  std::mt19937_64 rng(4);
  const RationalMatrix a = RandomSource(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(SymmetricSupportEnumeration(a));
}
BENCHMARK(BM_SymmetricSupportEnumeration)->DenseRange(3, 8)
    ->Unit(benchmark::kMillisecond);

void BM_MaxClique(benchmark::State& state) {
  std::mt19937_64 rng(5);
  const Graph g = Graph::Random(static_cast<int>(state.range(0)), 0.5, rng);
  for (auto _ : state) benchmark::DoNotOptimize(MaxClique(g));
}
BENCHMARK(BM_MaxClique)->Arg(8)->Arg(14)->Arg(20);

void BM_GridNeSearchIrrational(benchmark::State& state) {
  const NormalFormGame game = IrrationalGame();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        GridNeSearch(game, static_cast<int>(state.range(0)), 0.05, 100'000'000, 1));
  }
}
BENCHMARK(BM_GridNeSearchIrrational)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace symgames

BENCHMARK_MAIN();
