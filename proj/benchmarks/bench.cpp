/*
   Copyright 2026 The towerlab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#include <benchmark/benchmark.h>

#include "towerlab/block_cyclic.hpp"
#include "towerlab/curves.hpp"
#include "towerlab/families.hpp"
#include "towerlab/lfunction.hpp"

namespace {

using namespace towerlab;

void BM_FieldMul(benchmark::State& state) {
  const auto F = FiniteField::of_order(static_cast<std::uint64_t>(state.range(0)));
  FiniteField::Code x = 2 % F->order(), acc = 1;
  for (auto _ : state) {
    acc = F->mul(acc, x);
    x = F->add(x, 1);
    if (x == 0) x = 1;
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_FieldMul)->Arg(5)->Arg(3125)->Arg(1594323);

void BM_CountPoints(benchmark::State& state) {
  const auto F3 = FiniteField::prime(3);
  const auto model = kummer_pullback(FqPoly::from_ints(F3, {-1, 1}), 28);
  const auto m = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_points(model, m, Budget()));
}
BENCHMARK(BM_CountPoints)->Arg(6)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_CharPoly(benchmark::State& state) {
  const auto op = build_instance(static_cast<int>(state.range(0)), 5, 1, 7);
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(op));
}
BENCHMARK(BM_CharPoly)->Arg(2)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_LFunction(benchmark::State& state) {
  const auto m = family_model(1, 1, 5, static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(l_function(*m.weierstrass, Budget()));
}
BENCHMARK(BM_LFunction)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
