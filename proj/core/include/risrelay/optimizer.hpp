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

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "risrelay/channel.hpp"
#include "risrelay/models.hpp"
#include "risrelay/subsolvers.hpp"
#include "risrelay/system_config.hpp"

namespace risrelay {

enum class InitMode { Deterministic, RandomPhase };

struct SolverOptions {
    int max_outer_iters = 500;
    // Stop when |Δobjective| <= eps_rel · max(|objective|, 1) between two
    // consecutive fresh (U, W) evaluations.
    double eps_rel = 1e-4;
    InitMode init_mode = InitMode::Deterministic;
    // Seeds the unit-magnitude phases of RandomPhase initialization.
    std::uint64_t init_seed = 0;
    PhiSolverOptions phi{};

    void validate() const;
};

struct IterationRecord {
    double objective = 0.0;            // WMMSE objective at fresh (U, W)
    double spectral_efficiency = 0.0;  // bits/s/Hz, without the duplex factor
    double max_constraint_violation = 0.0;
};

struct IterationTrace {
    // One record for the initial point and one per outer iteration.
    std::vector<IterationRecord> records;
    // WMMSE objective after every block update, in update order, starting
    // with the initial fresh (U, W).
    std::vector<double> block_objectives;
    bool converged = false;
    int iters = 0;
};

struct RisResult {
    RisSolution solution;
    IterationTrace trace;
    double spectral_efficiency = 0.0;
};

struct RelayResult {
    RelaySolution solution;
    IterationTrace trace;
    double spectral_efficiency = 0.0;  // includes the duplex factor
    double relay_power = 0.0;          // tr(F D Fᴴ) at the output
    // G = F (I + H_s F)⁻¹ when the drop carries H_s and the recovery is
    // well conditioned (full-duplex relay only).
    std::optional<CMatrix> realizable_gain;
};

struct RelayBudgets {
    double source_w = 0.0;
    double relay_w = 0.0;
};

// Alternating (U, W) -> V -> Φ updates on the RIS-aided link.
RisResult optimize_ris(const ChannelSet& ch, const SystemConfig& cfg, const SolverOptions& opts);

// Direct link only: the RIS loop with Φ pinned to zero and the Φ-step skipped.
RisResult optimize_direct(const ChannelSet& ch, const SystemConfig& cfg,
                          const SolverOptions& opts);

// Alternating (U, W) -> V -> F updates under the source and relay budgets;
// the reported spectral efficiency is scaled by duplex_factor.
RelayResult optimize_relay(const ChannelSet& ch, const SystemConfig& cfg,
                           const SolverOptions& opts, RelayBudgets budgets, double duplex_factor);

// Budgets (P_s, P_r), full rate.
RelayResult optimize_fdr(const ChannelSet& ch, const SystemConfig& cfg, const SolverOptions& opts);

// Budgets (2P_s, 2P_r) per active slot, half rate.
RelayResult optimize_hdr(const ChannelSet& ch, const SystemConfig& cfg, const SolverOptions& opts);

// WMMSE objective tr(W E) − ln det W for the given variables.
double ris_objective(const ChannelSet& ch, const SystemConfig& cfg, const RisSolution& s);
double relay_objective(const ChannelSet& ch, const SystemConfig& cfg, const RelaySolution& s);

} // namespace risrelay
