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
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "risrelay/models.hpp"
#include "risrelay/optimizer.hpp"
#include "risrelay/system_config.hpp"

namespace risrelay {

enum class SweepParam { None, K, D1, Dr, Ps };

std::string_view to_string(SweepParam p) noexcept;
// Accepts the config names (K, d_1, d_r, P_s, none) and the CLI spellings
// (k, d1, dr, ps); throws InvalidConfig otherwise.
SweepParam parse_sweep_param(std::string_view name);

struct ExperimentSpec {
    SystemConfig base_config{};
    std::vector<Scheme> schemes{Scheme::Ris, Scheme::Fdr, Scheme::Hdr, Scheme::Direct};
    SweepParam sweep_param = SweepParam::None;
    // K as a count, d_1/d_r in meters, P_s in Watts. Ignored for None.
    std::vector<double> sweep_values;
    int drops = 20;
    std::uint64_t master_seed = 1;
    // Best-of-R by spectral efficiency; restart r >= 1 uses random phases.
    int restarts = 1;
    SolverOptions solver{};
    // Worker threads for independent rows; output order does not depend on it.
    int threads = 1;

    void validate() const;
};

struct ResultRow {
    Scheme scheme = Scheme::Ris;
    SweepParam sweep_param = SweepParam::None;
    double sweep_value = 0.0;
    int drop_index = 0;
    double rate_bps = 0.0;
    double spectral_efficiency = 0.0;
    double energy_efficiency_bpj = 0.0;
    int iterations = 0;
    bool converged = false;
    // Non-empty when the optimizer raised; the row then reports zero rate.
    std::string error;
};

// drop_seed = mix(master_seed, drop_index). Every scheme and every sweep
// value sees the same fading realization for a given drop index.
std::uint64_t derive_drop_seed(std::uint64_t master_seed, int drop_index) noexcept;

SystemConfig apply_sweep(const SystemConfig& base, SweepParam param, double value);

// Runs one (config, drop, scheme) cell, including restarts.
ResultRow run_cell(const SystemConfig& cfg, Scheme scheme, std::uint64_t drop_seed,
                   const SolverOptions& solver, int restarts);

// Rows sorted by scheme (RIS, FDR, HDR, DIRECT order of the enum), then
// sweep index, then drop.
std::vector<ResultRow> run_experiment(const ExperimentSpec& spec);

inline constexpr std::string_view kCsvHeader =
    "scheme,sweep_param,sweep_value,drop,rate_bps,spectral_efficiency_bphz,"
    "energy_efficiency_bpj,iterations,converged";

void write_csv(std::ostream& os, const std::vector<ResultRow>& rows);
std::string to_csv(const std::vector<ResultRow>& rows);

struct SummaryRow {
    Scheme scheme = Scheme::Ris;
    double sweep_value = 0.0;
    int drops = 0;
    double mean_rate_bps = 0.0;
    double median_rate_bps = 0.0;
    double mean_ee_bpj = 0.0;
    double median_ee_bpj = 0.0;
};

std::vector<SummaryRow> summarize(const std::vector<ResultRow>& rows);

double median(std::vector<double> values);

} // namespace risrelay
