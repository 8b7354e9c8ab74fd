// SPDX-License-Identifier: Apache-2.0
//
// patchkit - rectangular microstrip patch antenna synthesis and analysis
// Copyright (C) 2026 The patchkit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// Parallel kernels against their serial references. Run with
// OMP_NUM_THREADS set to compare scaling.

#include "patchkit/design.hpp"
#include "patchkit/network.hpp"
#include "patchkit/radiation.hpp"
#include "patchkit/tune.hpp"

#include <benchmark/benchmark.h>

using namespace patchkit;

namespace
{

const PatchDesign &design()
{
    static const PatchDesign d = design_patch({28e9, 50.0}, rt5880lz());
    return d;
}

const BandSpec kBand{26e9, 30e9, 401};
const tune::ToleranceSpec kTol{0.01, 0.005, 200, 7};

void BM_SweepParallel(benchmark::State &st)
{
    for (auto _ : st)
        benchmark::DoNotOptimize(network::evaluate_points(design(), kBand));
}

void BM_SweepSerial(benchmark::State &st)
{
    for (auto _ : st)
        benchmark::DoNotOptimize(reference::evaluate_points(design(), kBand));
}

void BM_GridParallel(benchmark::State &st)
{
    for (auto _ : st)
        benchmark::DoNotOptimize(radiation::intensity_grid(design().tlm, 28e9, 361, 720));
}

void BM_GridSerial(benchmark::State &st)
{
    const auto &t = design().tlm;
    auto fn = [&](double th, double ph) {
        return radiation::intensity(th * 180.0 / constants::pi, ph * 180.0 / constants::pi, t, 28e9);
    };
    for (auto _ : st)
        benchmark::DoNotOptimize(reference::sample_grid(fn, 361, 720, radiation::Support::Hemisphere));
}

void BM_MonteCarloParallel(benchmark::State &st)
{
    for (auto _ : st)
        benchmark::DoNotOptimize(tune::tolerance_mc(design(), kTol));
}

void BM_MonteCarloSerial(benchmark::State &st)
{
    for (auto _ : st)
        benchmark::DoNotOptimize(reference::tolerance_mc(design(), kTol));
}

} // namespace

BENCHMARK(BM_SweepParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonteCarloParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonteCarloSerial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
