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

#include "risrelay/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "risrelay/channel.hpp"

namespace risrelay {

std::string_view to_string(SweepParam p) noexcept
{
    switch (p) {
    case SweepParam::None: return "none";
    case SweepParam::K: return "K";
    case SweepParam::D1: return "d_1";
    case SweepParam::Dr: return "d_r";
    case SweepParam::Ps: return "P_s";
    }
    return "?";
}

SweepParam parse_sweep_param(std::string_view name)
{
    if (name == "none") return SweepParam::None;
    if (name == "K" || name == "k") return SweepParam::K;
    if (name == "d_1" || name == "d1") return SweepParam::D1;
    if (name == "d_r" || name == "dr") return SweepParam::Dr;
    if (name == "P_s" || name == "ps") return SweepParam::Ps;
    raise(ErrorCode::InvalidConfig, "unknown sweep parameter '" + std::string(name) + "'");
}

void ExperimentSpec::validate() const
{
    base_config.validate();
    solver.validate();
    if (schemes.empty()) {
        raise(ErrorCode::InvalidConfig, "at least one scheme is required");
    }
    if (drops < 1) {
        raise(ErrorCode::InvalidConfig, "drops must be >= 1");
    }
    if (restarts < 1) {
        raise(ErrorCode::InvalidConfig, "restarts must be >= 1");
    }
    if (threads < 1) {
        raise(ErrorCode::InvalidConfig, "threads must be >= 1");
    }
    if (sweep_param != SweepParam::None) {
        if (sweep_values.empty()) {
            raise(ErrorCode::InvalidConfig, "sweep_values must be non-empty");
        }
        for (double v : sweep_values) {
            apply_sweep(base_config, sweep_param, v).validate();
        }
    }
}

std::uint64_t derive_drop_seed(std::uint64_t master_seed, int drop_index) noexcept
{
    return mix_seed(mix_seed(master_seed, 0x64726f70ULL), static_cast<std::uint64_t>(drop_index));
}

SystemConfig apply_sweep(const SystemConfig& base, SweepParam param, double value)
{
    SystemConfig cfg = base;
    switch (param) {
    case SweepParam::None:
        break;
    case SweepParam::K:
        if (value < 1.0 || value != std::floor(value)) {
            raise(ErrorCode::InvalidConfig, "K sweep values must be positive integers");
        }
        cfg.ris_elements = static_cast<int>(value);
        break;
    case SweepParam::D1:
        cfg.geometry.d_1 = value;
        break;
    case SweepParam::Dr:
        cfg.geometry.d_r = value;
        break;
    case SweepParam::Ps:
        cfg.source_power_w = value;
        break;
    }
    return cfg;
}

namespace {

struct Outcome {
    double se = 0.0;
    int iterations = 0;
    bool converged = false;
};

Outcome optimize_once(const SystemConfig& cfg, Scheme scheme, std::uint64_t drop_seed,
                      const SolverOptions& opts)
{
    switch (scheme) {
    case Scheme::Ris: {
        const RisResult r = optimize_ris(generate_drop(cfg, drop_seed), cfg, opts);
        return {r.spectral_efficiency, r.trace.iters, r.trace.converged};
    }
    case Scheme::Direct: {
        const RisResult r = optimize_direct(generate_drop(cfg, drop_seed), cfg, opts);
        return {r.spectral_efficiency, r.trace.iters, r.trace.converged};
    }
    case Scheme::Fdr: {
        const RelayResult r =
            optimize_fdr(generate_drop(cfg, drop_seed, AssistingNode::Relay), cfg, opts);
        return {r.spectral_efficiency, r.trace.iters, r.trace.converged};
    }
    case Scheme::Hdr: {
        const RelayResult r =
            optimize_hdr(generate_drop(cfg, drop_seed, AssistingNode::Relay), cfg, opts);
        return {r.spectral_efficiency, r.trace.iters, r.trace.converged};
    }
    }
    return {};
}

} // namespace

ResultRow run_cell(const SystemConfig& cfg, Scheme scheme, std::uint64_t drop_seed,
                   const SolverOptions& solver, int restarts)
{
    ResultRow row;
    row.scheme = scheme;
    try {
        Outcome best;
        bool have = false;
        for (int r = 0; r < restarts; ++r) {
            SolverOptions opts = solver;
            if (r > 0) {
                opts.init_mode = InitMode::RandomPhase;
                opts.init_seed = mix_seed(drop_seed, static_cast<std::uint64_t>(r));
            }
            const Outcome o = optimize_once(cfg, scheme, drop_seed, opts);
            if (!have || o.se > best.se) {
                best = o;
                have = true;
            }
        }
        row.spectral_efficiency = best.se;
        row.rate_bps = cfg.bandwidth_hz * best.se;
        row.iterations = best.iterations;
        row.converged = best.converged;
    } catch (const Error& e) {
        row.error = e.what();
        row.spectral_efficiency = 0.0;
        row.rate_bps = 0.0;
        row.converged = false;
    }
    row.energy_efficiency_bpj =
        energy_efficiency(row.rate_bps, scheme, cfg.source_power_w, cfg.relay_power_w);
    return row;
}

std::vector<ResultRow> run_experiment(const ExperimentSpec& spec)
{
    spec.validate();
    std::vector<double> values = spec.sweep_values;
    if (spec.sweep_param == SweepParam::None) {
        values = {0.0};
    }

    // Canonical order: scheme, sweep index, drop.
    struct Cell {
        Scheme scheme;
        std::size_t sweep_index;
        int drop;
    };
    std::vector<Scheme> schemes = spec.schemes;
    std::stable_sort(schemes.begin(), schemes.end());
    schemes.erase(std::unique(schemes.begin(), schemes.end()), schemes.end());

    std::vector<Cell> cells;
    for (Scheme s : schemes) {
        for (std::size_t i = 0; i < values.size(); ++i) {
            for (int d = 0; d < spec.drops; ++d) {
                cells.push_back({s, i, d});
            }
        }
    }

    std::vector<SystemConfig> configs;
    for (double v : values) {
        configs.push_back(apply_sweep(spec.base_config, spec.sweep_param, v));
    }

    std::vector<ResultRow> rows(cells.size());
    auto work = [&](std::size_t idx) {
        const Cell& c = cells[idx];
        ResultRow row = run_cell(configs[c.sweep_index], c.scheme,
                                 derive_drop_seed(spec.master_seed, c.drop), spec.solver,
                                 spec.restarts);
        row.sweep_param = spec.sweep_param;
        row.sweep_value = values[c.sweep_index];
        row.drop_index = c.drop;
        rows[idx] = std::move(row);
    };

    const auto workers = static_cast<std::size_t>(std::max(spec.threads, 1));
    if (workers == 1 || cells.size() < 2) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            work(i);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < std::min(workers, cells.size()); ++t) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < cells.size(); i = next++) {
                    work(i);
                }
            });
        }
    }
    return rows;
}

namespace {

std::string format_real(double x)
{
    std::ostringstream os;
    os << std::setprecision(12) << x;
    return os.str();
}

} // namespace

void write_csv(std::ostream& os, const std::vector<ResultRow>& rows)
{
    os << kCsvHeader << '\n';
    for (const ResultRow& r : rows) {
        os << to_string(r.scheme) << ',' << to_string(r.sweep_param) << ','
           << format_real(r.sweep_value) << ',' << r.drop_index << ',' << format_real(r.rate_bps)
           << ',' << format_real(r.spectral_efficiency) << ','
           << format_real(r.energy_efficiency_bpj) << ',' << r.iterations << ','
           << (r.converged ? "true" : "false") << '\n';
    }
}

std::string to_csv(const std::vector<ResultRow>& rows)
{
    std::ostringstream os;
    write_csv(os, rows);
    return os.str();
}

double median(std::vector<double> values)
{
    if (values.empty()) {
        return 0.0;
    }
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

std::vector<SummaryRow> summarize(const std::vector<ResultRow>& rows)
{
    std::map<std::pair<Scheme, double>, std::pair<std::vector<double>, std::vector<double>>> groups;
    for (const ResultRow& r : rows) {
        auto& g = groups[{r.scheme, r.sweep_value}];
        g.first.push_back(r.rate_bps);
        g.second.push_back(r.energy_efficiency_bpj);
    }
    std::vector<SummaryRow> out;
    for (const auto& [key, g] : groups) {
        SummaryRow s;
        s.scheme = key.first;
        s.sweep_value = key.second;
        s.drops = static_cast<int>(g.first.size());
        for (double x : g.first) s.mean_rate_bps += x;
        for (double x : g.second) s.mean_ee_bpj += x;
        s.mean_rate_bps /= s.drops;
        s.mean_ee_bpj /= s.drops;
        s.median_rate_bps = median(g.first);
        s.median_ee_bpj = median(g.second);
        out.push_back(s);
    }
    return out;
}

} // namespace risrelay
