// SPDX-License-Identifier: Apache-2.0
//
// risrelay - link-level optimization of RIS- and relay-aided MIMO links
// Copyright (C) 2026 The risrelay authors
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

#include <benchmark/benchmark.h>

#include "risrelay/channel.hpp"
#include "risrelay/optimizer.hpp"

using namespace risrelay;

static void BM_OptimizeRis(benchmark::State& state)
{
    SystemConfig cfg;
    cfg.ris_elements = static_cast<int>(state.range(0));
    const ChannelSet ch = generate_drop(cfg, 1);
    int iters = 0;
    for (auto _ : state) {
        const RisResult r = optimize_ris(ch, cfg, {});
        iters = r.trace.iters;
        benchmark::DoNotOptimize(r.spectral_efficiency);
    }
    state.counters["outer_iters"] = iters;
}
BENCHMARK(BM_OptimizeRis)->Arg(20)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_OptimizeFdr(benchmark::State& state)
{
    const SystemConfig cfg;
    const ChannelSet ch = generate_drop(cfg, static_cast<std::uint64_t>(state.range(0)), AssistingNode::Relay);
    int iters = 0;
    for (auto _ : state) {
        const RelayResult r = optimize_fdr(ch, cfg, {});
        iters = r.trace.iters;
        benchmark::DoNotOptimize(r.spectral_efficiency);
    }
    state.counters["outer_iters"] = iters;
}
BENCHMARK(BM_OptimizeFdr)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_OptimizeDirect(benchmark::State& state)
{
    const SystemConfig cfg;
    const ChannelSet ch = generate_drop(cfg, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(optimize_direct(ch, cfg, {}).spectral_efficiency);
    }
}
BENCHMARK(BM_OptimizeDirect)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
