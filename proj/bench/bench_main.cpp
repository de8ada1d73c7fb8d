/*
* Copyright 2026 The hgff Authors
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*      http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing, software
* distributed under the License is distributed on an "AS IS" BASIS,
* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
* See the License for the specific language governing permissions and
* limitations under the License.
*/

// Serial reference vs OpenMP kernels. Thread count is the second range arg
// of the parallel variants (0 = OpenMP default).

#include <benchmark/benchmark.h>

#include "hgff/hyper.hpp"
#include "hgff/identities.hpp"
#include "hgff/varieties.hpp"

using namespace hgff;

namespace {

void BM_VerifySerial(benchmark::State& st) {
    auto F = build_field_q(st.range(0));
    const auto& d = find_identity("THOMAE");
    verify_serial(d, F, VerifyMode{});  // warm the per-field tables
    for (auto _ : st) benchmark::DoNotOptimize(verify_serial(d, F, VerifyMode{}).cases_checked);
}

void BM_VerifyParallel(benchmark::State& st) {
    auto F = build_field_q(st.range(0));
    const auto& d = find_identity("THOMAE");
    verify(d, F, VerifyMode{}, int(st.range(1)));
    for (auto _ : st) benchmark::DoNotOptimize(verify(d, F, VerifyMode{}, int(st.range(1))).cases_checked);
}

ParamMultiset num(int N) { return ParamMultiset(N, {1, 2, 3}); }
ParamMultiset den(int N) { return ParamMultiset(N, {0, 5, 7}); }

void BM_HypTableSerial(benchmark::State& st) {
    auto F = build_field_q(st.range(0));
    const GaussAlgebra& G = gauss_algebra(F);
    const int N = F->q - 1;
    for (auto _ : st) benchmark::DoNotOptimize(hyp_table_serial(G, num(N), den(N)).size());
}

void BM_HypTableParallel(benchmark::State& st) {
    auto F = build_field_q(st.range(0));
    const GaussAlgebra& G = gauss_algebra(F);
    const int N = F->q - 1;
    for (auto _ : st) benchmark::DoNotOptimize(hyp_table(G, num(N), den(N), int(st.range(1))).size());
}

}  // namespace

BENCHMARK(BM_VerifySerial)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyParallel)->Args({7, 1})->Args({7, 0})->Args({9, 1})->Args({9, 0})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HypTableSerial)->Arg(13)->Arg(27)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HypTableParallel)->Args({13, 1})->Args({13, 0})->Args({27, 1})->Args({27, 0})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
