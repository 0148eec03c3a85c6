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

#include "risrelay/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "risrelay/wmmse.hpp"

namespace risrelay {

void SolverOptions::validate() const
{
    if (max_outer_iters < 1) {
        raise(ErrorCode::InvalidConfig, "max_outer_iters must be >= 1");
    }
    if (!(eps_rel > 0.0)) {
        raise(ErrorCode::InvalidConfig, "eps_rel must be > 0");
    }
    if (phi.max_cycles < 1 || !(phi.rel_tol > 0.0)) {
        raise(ErrorCode::InvalidConfig, "invalid Φ-step tolerances");
    }
}

namespace {

constexpr double kNonMonotoneRel = 1e-6;

// Objective chain kept in update order; a rise beyond kNonMonotoneRel means
// one of the block solvers is not minimizing its block.
class ObjectiveChain {
public:
    explicit ObjectiveChain(IterationTrace& trace) : trace_(trace) {}

    void push(double value, const char* block)
    {
        if (!trace_.block_objectives.empty()) {
            const double prev = trace_.block_objectives.back();
            if (value > prev + kNonMonotoneRel * std::max(std::abs(prev), 1.0)) {
                std::ostringstream os;
                os << block << " step raised the WMMSE objective from " << prev << " to "
                   << value;
                raise(ErrorCode::NonMonotone, os.str());
            }
        }
        trace_.block_objectives.push_back(value);
    }

private:
    IterationTrace& trace_;
};

bool has_converged(double current, double previous, double eps_rel)
{
    return std::abs(current - previous) <= eps_rel * std::max(std::abs(current), 1.0);
}

CMatrix initial_beamformer(int m, int l, double power)
{
    return std::sqrt(power / l) * CMatrix::Identity(m, l);
}

CVector initial_phases(Eigen::Index n, const SolverOptions& opts)
{
    CVector out = CVector::Ones(n);
    if (opts.init_mode == InitMode::RandomPhase) {
        std::mt19937_64 rng(mix_seed(opts.init_seed, 0x70686173ULL));
        std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
        for (Eigen::Index i = 0; i < n; ++i) {
            out(i) = std::polar(1.0, angle(rng));
        }
    }
    return out;
}

void check_channels(const ChannelSet& ch, const SystemConfig& cfg, Eigen::Index nodes)
{
    require_shape(ch.direct.rows() == cfg.rx_antennas && ch.direct.cols() == cfg.tx_antennas,
                  "H_d does not match N×M");
    require_shape(ch.first_hop.rows() == nodes && ch.first_hop.cols() == cfg.tx_antennas,
                  "H_1 does not match the assisting node size");
    require_shape(ch.second_hop.rows() == cfg.rx_antennas && ch.second_hop.cols() == nodes,
                  "H_2 does not match the assisting node size");
}

RisResult run_ris(const ChannelSet& ch, const SystemConfig& cfg, const SolverOptions& opts,
                  bool reflect)
{
    cfg.validate();
    opts.validate();
    if (reflect) {
        check_channels(ch, cfg, cfg.ris_elements);
    } else {
        require_shape(ch.direct.rows() == cfg.rx_antennas && ch.direct.cols() == cfg.tx_antennas,
                      "H_d does not match N×M");
    }

    const double p_s = cfg.source_power_w;
    const Eigen::Index n = cfg.rx_antennas;
    const CMatrix r_n = cfg.noise_dest_w * CMatrix::Identity(n, n);

    RisResult out;
    RisSolution& s = out.solution;
    IterationTrace& trace = out.trace;
    ObjectiveChain chain(trace);

    s.V = initial_beamformer(cfg.tx_antennas, cfg.streams, p_s);
    s.phi = reflect ? initial_phases(cfg.ris_elements, opts)
                    : CVector::Zero(ch.first_hop.rows());

    auto channel = [&] {
        return reflect ? effective_channel_ris(ch.direct, ch.first_hop, ch.second_hop, s.phi)
                       : CMatrix(ch.direct);
    };
    auto violation = [&] {
        double v = s.V.squaredNorm() - p_s;
        if (reflect && s.phi.size() > 0) {
            v = std::max(v, s.phi.cwiseAbs().maxCoeff() - 1.0);
        }
        return std::max(v, 0.0);
    };

    CMatrix h = channel();
    {
        const WmmseState st = fresh_wmmse_state(h, s.V, r_n);
        s.U = st.U;
        s.W = st.W;
        chain.push(st.objective, "initial");
        trace.records.push_back({st.objective, spectral_efficiency(h, s.V, r_n), violation()});
    }
    double previous = trace.block_objectives.back();

    for (int it = 1; it <= opts.max_outer_iters; ++it) {
        const CMatrix hu = h.adjoint() * s.U;
        const CMatrix a = hermitian_part(hu * s.W * hu.adjoint());
        const CMatrix b = hu * s.W;
        s.V = solve_v_power_constrained(a, b, p_s);
        chain.push(wmmse_objective(s.W, mse_matrix(s.U, h, s.V, r_n)), "V");

        if (reflect) {
            const QuadraticForm q =
                build_phi_quadratic(ch.direct, ch.first_hop, ch.second_hop, s.U, s.W, s.V);
            s.phi = solve_phi(q, s.phi, opts.phi);
            h = channel();
            chain.push(wmmse_objective(s.W, mse_matrix(s.U, h, s.V, r_n)), "Phi");
        }

        s.U = mmse_receiver(h, s.V, r_n);
        const CMatrix e = mse_matrix(s.U, h, s.V, r_n);
        chain.push(wmmse_objective(s.W, e), "U");
        s.W = weight_update(e);
        const double fresh = wmmse_objective(s.W, e);
        chain.push(fresh, "W");

        trace.records.push_back({fresh, spectral_efficiency(h, s.V, r_n), violation()});
        trace.iters = it;
        if (has_converged(fresh, previous, opts.eps_rel)) {
            trace.converged = true;
            break;
        }
        previous = fresh;
    }
    out.spectral_efficiency = spectral_efficiency(h, s.V, r_n);
    return out;
}

} // namespace

RisResult optimize_ris(const ChannelSet& ch, const SystemConfig& cfg, const SolverOptions& opts)
{
    return run_ris(ch, cfg, opts, true);
}

RisResult optimize_direct(const ChannelSet& ch, const SystemConfig& cfg,
                          const SolverOptions& opts)
{
    return run_ris(ch, cfg, opts, false);
}

RelayResult optimize_relay(const ChannelSet& ch, const SystemConfig& cfg,
                           const SolverOptions& opts, RelayBudgets budgets, double duplex_factor)
{
    cfg.validate();
    opts.validate();
    check_channels(ch, cfg, cfg.relay_antennas);
    if (!(budgets.source_w > 0.0) || !(budgets.relay_w > 0.0)) {
        raise(ErrorCode::InvalidConfig, "relay budgets must be > 0");
    }

    const CMatrix& h_d = ch.direct;
    const CMatrix& h_1 = ch.first_hop;
    const CMatrix& h_2 = ch.second_hop;
    const double s2r = cfg.noise_relay_w;
    const double s2d = cfg.noise_dest_w;
    const Eigen::Index l_relay = cfg.relay_antennas;

    RelayResult out;
    RelaySolution& s = out.solution;
    IterationTrace& trace = out.trace;
    ObjectiveChain chain(trace);

    s.V = initial_beamformer(cfg.tx_antennas, cfg.streams, budgets.source_w);
    {
        const CMatrix g1 = h_1 * s.V;
        const double tr_d = g1.squaredNorm() + s2r * static_cast<double>(l_relay);
        const double beta = std::sqrt(budgets.relay_w / tr_d);
        s.F = beta * CMatrix(initial_phases(l_relay, opts).asDiagonal());
    }

    CMatrix h = effective_channel_relay(h_d, h_1, h_2, s.F);
    CMatrix r_n = noise_cov_relay(h_2, s.F, s2r, s2d);
    auto violation = [&] {
        const double v = std::max(s.V.squaredNorm() - budgets.source_w,
                                  relay_tx_power(s.F, h_1, s.V, s2r) - budgets.relay_w);
        return std::max(v, 0.0);
    };

    {
        const WmmseState st = fresh_wmmse_state(h, s.V, r_n);
        s.U = st.U;
        s.W = st.W;
        chain.push(st.objective, "initial");
        trace.records.push_back({st.objective, spectral_efficiency(h, s.V, r_n), violation()});
    }
    double previous = trace.block_objectives.back();

    for (int it = 1; it <= opts.max_outer_iters; ++it) {
        // V-step: tr(VVᴴ) <= P_s and tr(F H_1 V Vᴴ H_1ᴴ Fᴴ) <= P_r − σ_R² tr(F Fᴴ).
        const CMatrix hu = h.adjoint() * s.U;
        const CMatrix a = hermitian_part(hu * s.W * hu.adjoint());
        const CMatrix b = hu * s.W;
        const CMatrix fh1 = s.F * h_1;
        const CMatrix j = hermitian_part(fh1.adjoint() * fh1);
        // Rounding can push a fully used relay budget a hair below zero.
        const double c2 = std::max(budgets.relay_w - s2r * s.F.squaredNorm(), 0.0);
        s.V = solve_v_two_constraints(a, b, j, budgets.source_w, c2);
        chain.push(wmmse_objective(s.W, mse_matrix(s.U, h, s.V, r_n)), "V");

        const FQuadratic fq = build_f_quadratic(h_d, h_1, h_2, s.U, s.W, s.V, s2r);
        s.F = solve_f(fq.form, fq.D, budgets.relay_w);
        h = effective_channel_relay(h_d, h_1, h_2, s.F);
        r_n = noise_cov_relay(h_2, s.F, s2r, s2d);
        chain.push(wmmse_objective(s.W, mse_matrix(s.U, h, s.V, r_n)), "F");

        s.U = mmse_receiver(h, s.V, r_n);
        const CMatrix e = mse_matrix(s.U, h, s.V, r_n);
        chain.push(wmmse_objective(s.W, e), "U");
        s.W = weight_update(e);
        const double fresh = wmmse_objective(s.W, e);
        chain.push(fresh, "W");

        trace.records.push_back({fresh, spectral_efficiency(h, s.V, r_n), violation()});
        trace.iters = it;
        if (has_converged(fresh, previous, opts.eps_rel)) {
            trace.converged = true;
            break;
        }
        previous = fresh;
    }

    out.spectral_efficiency = spectral_efficiency(h, s.V, r_n, duplex_factor);
    out.relay_power = relay_tx_power(s.F, h_1, s.V, s2r);
    return out;
}

RelayResult optimize_fdr(const ChannelSet& ch, const SystemConfig& cfg, const SolverOptions& opts)
{
    RelayResult out = optimize_relay(ch, cfg, opts, {cfg.source_power_w, cfg.relay_power_w},
                                     kFullDuplex);
    if (ch.self_interference) {
        try {
            out.realizable_gain = recover_g(out.solution.F, *ch.self_interference);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::SingularRecovery) {
                throw;
            }
        }
    }
    return out;
}

RelayResult optimize_hdr(const ChannelSet& ch, const SystemConfig& cfg, const SolverOptions& opts)
{
    return optimize_relay(ch, cfg, opts, {2.0 * cfg.source_power_w, 2.0 * cfg.relay_power_w},
                          kHalfDuplex);
}

double ris_objective(const ChannelSet& ch, const SystemConfig& cfg, const RisSolution& s)
{
    const Eigen::Index n = cfg.rx_antennas;
    const CMatrix r_n = cfg.noise_dest_w * CMatrix::Identity(n, n);
    const CMatrix h = effective_channel_ris(ch.direct, ch.first_hop, ch.second_hop, s.phi);
    return wmmse_objective(s.W, mse_matrix(s.U, h, s.V, r_n));
}

double relay_objective(const ChannelSet& ch, const SystemConfig& cfg, const RelaySolution& s)
{
    const CMatrix h = effective_channel_relay(ch.direct, ch.first_hop, ch.second_hop, s.F);
    const CMatrix r_n = noise_cov_relay(ch.second_hop, s.F, cfg.noise_relay_w, cfg.noise_dest_w);
    return wmmse_objective(s.W, mse_matrix(s.U, h, s.V, r_n));
}

} // namespace risrelay
