// Copyright 2026 The cyclo Authors
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

#include "cyclo/bigpoly.hpp"
#include "cyclo/cyclotomic.hpp"
#include "cyclo/realroots.hpp"

using namespace cyclo;

namespace {

IntPoly pseudo_random(std::size_t n, long seed) {
  std::vector<Int> c(n);
  long s = seed;
  for (auto& x : c) {
    s = (s * 1103515245 + 12345) % 2147483648L;
    x = s % 2000001 - 1000000;
  }
  if (c.back() == 0) c.back() = 1;
  return IntPoly(c);
}

void BM_Mul(benchmark::State& st) {
  auto a = pseudo_random(st.range(0), 1), b = pseudo_random(st.range(0), 2);
  for (auto _ : st) benchmark::DoNotOptimize(a * b);
  st.SetComplexityN(st.range(0));
}
BENCHMARK(BM_Mul)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_MulSchoolbook(benchmark::State& st) {
  auto a = pseudo_random(st.range(0), 1), b = pseudo_random(st.range(0), 2);
  for (auto _ : st) benchmark::DoNotOptimize(mul_schoolbook(a, b));
}
BENCHMARK(BM_MulSchoolbook)->RangeMultiplier(4)->Range(16, 1024);

void BM_TaylorShift(benchmark::State& st) {
  auto a = pseudo_random(st.range(0), 3);
  for (auto _ : st) {
    auto c = a.coeffs();
    taylor_shift_int(c, Int(1));
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_TaylorShift)->RangeMultiplier(4)->Range(16, 1024);

void BM_PhiUncached(benchmark::State& st) {
  GeneralIndex idx(static_cast<std::uint64_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(cyclotomic::phi_poly_uncached(idx));
}
BENCHMARK(BM_PhiUncached)->Arg(105)->Arg(1155)->Arg(15015)->Unit(benchmark::kMillisecond);

void BM_CountCriticalPoints(benchmark::State& st) {
  IntPoly d = cyclotomic::phi_derivative(static_cast<std::uint64_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(roots::count_critical_points(d));
}
BENCHMARK(BM_CountCriticalPoints)->Arg(105)->Arg(885)->Arg(1155)->Unit(benchmark::kMillisecond);

void BM_SturmCountAll(benchmark::State& st) {
  IntPoly d = cyclotomic::phi_derivative(static_cast<std::uint64_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(roots::sturm_count_all(d));
}
BENCHMARK(BM_SturmCountAll)->Arg(105)->Arg(385)->Unit(benchmark::kMillisecond);

}  // namespace
