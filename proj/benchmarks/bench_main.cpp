// Copyright 2026 The sierpharm Authors. All Rights Reserved.
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

#include <random>
#include <string>

#include "sierpharm/harmonic.hpp"
#include "sierpharm/holder.hpp"
#include "sierpharm/matrix.hpp"
#include "sierpharm/tangent.hpp"

namespace {

using namespace sierpharm;

std::string random_word(std::size_t len, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::string w;
    for (std::size_t i = 0; i < len; ++i) w.push_back(rng() & 1 ? '1' : '0');
    return w;
}

void BM_WordProduct(benchmark::State& state) {
    const std::string w = random_word(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(word_product(w));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_WordProduct)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_AlphaEstimate(benchmark::State& state) {
    const std::string w = random_word(static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(alpha_estimate_at(w));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AlphaEstimate)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_AlphaPeriod(benchmark::State& state) {
    const std::string w = "0" + random_word(static_cast<std::size_t>(state.range(0)) - 1, 3) + "1";
    for (auto _ : state) benchmark::DoNotOptimize(alpha_period(w));
}
BENCHMARK(BM_AlphaPeriod)->Arg(8)->Arg(32)->Arg(128);

void BM_GenerateTable(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(generate_table(static_cast<std::size_t>(state.range(0)), true));
}
BENCHMARK(BM_GenerateTable)->Arg(7)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_HarmonicGrid(benchmark::State& state) {
    const BoundaryTriple<Rational> b{1, make_rational(-2, 3), make_rational(5, 7)};
    for (auto _ : state) benchmark::DoNotOptimize(harmonic_grid(b, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_HarmonicGrid)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_DirectionExact(benchmark::State& state) {
    const Rational s = make_rational(11, 127);
    for (auto _ : state) benchmark::DoNotOptimize(direction_at_rational_exact(s, Side::Right));
}
BENCHMARK(BM_DirectionExact);

}  // namespace

BENCHMARK_MAIN();
