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

#include <random>

#include "risrelay/channel.hpp"
#include "risrelay/subsolvers.hpp"

using namespace risrelay;

namespace {

CMatrix gauss(Eigen::Index r, Eigen::Index c, std::mt19937_64& rng)
{
    return sample_fading(static_cast<int>(r), static_cast<int>(c), 0.0, rng);
}

QuadraticForm phi_form(Eigen::Index k, std::mt19937_64& rng)
{
    const CMatrix h_d = gauss(4, 4, rng), h_1 = gauss(k, 4, rng), h_2 = gauss(4, k, rng);
    const CMatrix u = gauss(4, 4, rng), v = gauss(4, 4, rng);
    const CMatrix w = u.adjoint() * u + CMatrix::Identity(4, 4);
    return build_phi_quadratic(h_d, h_1, h_2, u, w, v);
}

void BM_BuildPhi(benchmark::State& state)
{
    std::mt19937_64 rng(1);
    const Eigen::Index k = state.range(0);
    const CMatrix h_d = gauss(4, 4, rng), h_1 = gauss(k, 4, rng), h_2 = gauss(4, k, rng);
    const CMatrix u = gauss(4, 4, rng), v = gauss(4, 4, rng);
    const CMatrix w = u.adjoint() * u + CMatrix::Identity(4, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_phi_quadratic(h_d, h_1, h_2, u, w, v));
    }
}
BENCHMARK(BM_BuildPhi)->Arg(20)->Arg(100)->Arg(200);

void BM_SolvePhi(benchmark::State& state)
{
    std::mt19937_64 rng(2);
    const QuadraticForm q = phi_form(state.range(0), rng);
    const CVector phi0 = CVector::Ones(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_phi(q, phi0));
    }
}
BENCHMARK(BM_SolvePhi)->Arg(20)->Arg(100)->Arg(200);

void BM_SolveVPower(benchmark::State& state)
{
    std::mt19937_64 rng(3);
    const CMatrix g = gauss(4, 4, rng);
    const CMatrix a = g.adjoint() * g;
    const CMatrix b = gauss(4, 4, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_v_power_constrained(a, b, 0.5));
    }
}
BENCHMARK(BM_SolveVPower);

void BM_SolveVTwo(benchmark::State& state)
{
    std::mt19937_64 rng(4);
    const CMatrix g = gauss(4, 4, rng), h = gauss(4, 4, rng);
    const CMatrix a = g.adjoint() * g, j = h.adjoint() * h;
    const CMatrix b = gauss(4, 4, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_v_two_constraints(a, b, j, 1.0, 0.3));
    }
}
BENCHMARK(BM_SolveVTwo);

void BM_SolveF(benchmark::State& state)
{
    std::mt19937_64 rng(5);
    const Eigen::Index l = state.range(0);
    const CMatrix h_d = gauss(4, 4, rng), h_1 = gauss(l, 4, rng), h_2 = gauss(4, l, rng);
    const CMatrix u = gauss(4, 4, rng), v = gauss(4, 4, rng);
    const CMatrix w = u.adjoint() * u + CMatrix::Identity(4, 4);
    const FQuadratic fq = build_f_quadratic(h_d, h_1, h_2, u, w, v, 0.1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_f(fq.form, fq.D, 1.0));
    }
}
BENCHMARK(BM_SolveF)->Arg(2)->Arg(4)->Arg(8);

} // namespace

BENCHMARK_MAIN();
