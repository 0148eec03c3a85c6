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

#include "risrelay/validation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "risrelay/channel.hpp"
#include "risrelay/experiment.hpp"
#include "risrelay/models.hpp"
#include "risrelay/optimizer.hpp"
#include "risrelay/oracles.hpp"
#include "risrelay/waterfilling.hpp"
#include "risrelay/wmmse.hpp"

namespace risrelay {

bool ValidationReport::all_passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string ValidationReport::format() const
{
    std::string out;
    char line[256];
    std::snprintf(line, sizeof line, "risrelay validate seed=%llu\n",
                  static_cast<unsigned long long>(seed));
    out += line;
    int passed = 0;
    for (const CheckResult& c : checks) {
        std::snprintf(line, sizeof line, "%-30s %s  residual=%.3e  tol=%.1e  cases=%d\n",
                      c.name.c_str(), c.passed ? "PASS" : "FAIL", c.residual, c.tolerance,
                      c.cases);
        out += line;
        passed += c.passed ? 1 : 0;
    }
    std::snprintf(line, sizeof line, "%d/%zu checks passed\n", passed, checks.size());
    out += line;
    return out;
}

namespace {

CMatrix randn(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng)
{
    std::normal_distribution<double> g(0.0, std::sqrt(0.5));
    CMatrix m(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j) {
        for (Eigen::Index i = 0; i < rows; ++i) {
            const double re = g(rng);
            const double im = g(rng);
            m(i, j) = Complex(re, im);
        }
    }
    return m;
}

double uniform(std::mt19937_64& rng, double lo, double hi)
{
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

int uniform_int(std::mt19937_64& rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

CVector random_disk_point(Eigen::Index n, std::mt19937_64& rng)
{
    CVector phi(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        phi(i) = std::polar(std::sqrt(uniform(rng, 0.0, 1.0)),
                            uniform(rng, 0.0, 2.0 * std::numbers::pi));
    }
    return phi;
}

CMatrix scaled_to_power(CMatrix v, double p)
{
    return v * std::sqrt(p / v.squaredNorm());
}

CheckResult make(const char* name, double residual, double tol, int cases)
{
    return CheckResult{name, residual <= tol, residual, tol, cases};
}

double rel_gap(double value, double reference)
{
    return std::abs(value - reference) / std::max(std::abs(reference), 1e-300);
}

// ---- identities --------------------------------------------------------

CheckResult check_push_through(std::mt19937_64& rng)
{
    double worst = 0.0;
    const int cases = 20;
    for (int c = 0; c < cases; ++c) {
        const CMatrix a = randn(4, 3, rng);
        const CMatrix b = randn(3, 4, rng);
        const CMatrix i3 = CMatrix::Identity(3, 3);
        const CMatrix lhs = i3 - b * (a * b + CMatrix::Identity(4, 4)).inverse() * a;
        const CMatrix rhs = (i3 + b * a).inverse();
        worst = std::max(worst, (lhs - rhs).norm() / rhs.norm());
    }
    return make("push_through_identity", worst, 1e-9, cases);
}

CheckResult check_det_identity(std::mt19937_64& rng)
{
    double worst = 0.0;
    const int cases = 20;
    for (int c = 0; c < cases; ++c) {
        const CMatrix a = randn(4, 3, rng);
        const CMatrix b = randn(3, 4, rng);
        const Complex d1 = (CMatrix::Identity(4, 4) + a * b).determinant();
        const Complex d2 = (CMatrix::Identity(3, 3) + b * a).determinant();
        worst = std::max(worst, std::abs(d1 - d2) / std::abs(d1));
    }
    return make("determinant_identity", worst, 1e-9, cases);
}

struct RisInstance {
    CMatrix h_d, h_1, h_2, v;
    CVector phi;
    double sigma2;
};

RisInstance random_ris_instance(int m, int n, int k, int l, std::mt19937_64& rng)
{
    RisInstance x;
    x.h_d = randn(n, m, rng);
    x.h_1 = randn(k, m, rng);
    x.h_2 = randn(n, k, rng) * 0.5;
    x.v = scaled_to_power(randn(m, l, rng), uniform(rng, 0.5, 5.0));
    x.phi = random_disk_point(k, rng);
    x.sigma2 = uniform(rng, 0.1, 1.0);
    return x;
}

CheckResult check_rate_certificate(std::mt19937_64& rng)
{
    double worst = 0.0;
    const int cases = 50;
    for (int c = 0; c < cases; ++c) {
        const RisInstance x = random_ris_instance(4, 4, 8, 4, rng);
        const CMatrix h = effective_channel_ris(x.h_d, x.h_1, x.h_2, x.phi);
        const CMatrix r_n = x.sigma2 * CMatrix::Identity(4, 4);
        const WmmseState st = fresh_wmmse_state(h, x.v, r_n);
        const double se = spectral_efficiency(h, x.v, r_n);
        worst = std::max(worst, rel_gap((4.0 - st.objective) / std::numbers::ln2, se));
    }
    return make("wmmse_rate_certificate", worst, 1e-8, cases);
}

CheckResult check_mmse_optimality(std::mt19937_64& rng)
{
    double worst = 0.0;
    const int cases = 20;
    for (int c = 0; c < cases; ++c) {
        const RisInstance x = random_ris_instance(4, 4, 8, 4, rng);
        const CMatrix h = effective_channel_ris(x.h_d, x.h_1, x.h_2, x.phi);
        const CMatrix r_n = x.sigma2 * CMatrix::Identity(4, 4);
        const CMatrix u = mmse_receiver(h, x.v, r_n);
        const double base = trace_re(mse_matrix(u, h, x.v, r_n));
        for (int p = 0; p < 20; ++p) {
            CMatrix delta = randn(u.rows(), u.cols(), rng);
            delta *= 1e-3 / delta.norm();
            const double t = trace_re(mse_matrix(u + delta, h, x.v, r_n));
            worst = std::max(worst, base - t);
        }
    }
    return make("mmse_receiver_optimality", std::max(worst, 0.0), 1e-8, cases);
}

// ---- builder contracts --------------------------------------------------

CheckResult check_f_builder_contract(std::mt19937_64& rng)
{
    double worst = 0.0;
    const int cases = 100;
    for (int c = 0; c < cases; ++c) {
        const int m = uniform_int(rng, 2, 4);
        const int n = uniform_int(rng, 2, 4);
        const int l = uniform_int(rng, 1, std::min(m, n));
        const int lr = uniform_int(rng, 2, 4);
        const CMatrix h_d = randn(n, m, rng);
        const CMatrix h_1 = randn(lr, m, rng);
        const CMatrix h_2 = randn(n, lr, rng);
        const CMatrix v = randn(m, l, rng);
        const CMatrix u = randn(n, l, rng);
        const CMatrix wr = randn(l, l, rng);
        const CMatrix w = wr * wr.adjoint() + CMatrix::Identity(l, l);
        const double s2r = uniform(rng, 0.1, 1.0);
        const double s2d = uniform(rng, 0.1, 1.0);
        const FQuadratic fq = build_f_quadratic(h_d, h_1, h_2, u, w, v, s2r);

        double lo = INFINITY, hi = -INFINITY, scale = 1.0;
        for (int p = 0; p < 20; ++p) {
            const CMatrix f = randn(lr, lr, rng);
            const CMatrix h = effective_channel_relay(h_d, h_1, h_2, f);
            const CMatrix r_n = noise_cov_relay(h_2, f, s2r, s2d);
            const double direct = (w * mse_matrix(u, h, v, r_n)).trace().real();
            const double gap = fq.form.evaluate(vec(f)) - direct;
            lo = std::min(lo, gap);
            hi = std::max(hi, gap);
            scale = std::max(scale, std::abs(direct));
        }
        worst = std::max(worst, (hi - lo) / scale);
    }
    return make("f_builder_contract", worst, 1e-8, cases);
}

// ---- subsolvers vs projected gradient -----------------------------------

CMatrix random_psd(int n, int rank, std::mt19937_64& rng)
{
    const CMatrix x = randn(n, rank, rng);
    return hermitian_part(x * x.adjoint());
}

CheckResult check_v_power_vs_pg(std::mt19937_64& rng)
{
    double worst = 0.0;
    const int cases = 50;
    for (int c = 0; c < cases; ++c) {
        const int m = uniform_int(rng, 1, 4);
        const int l = uniform_int(rng, 1, m);
        const CMatrix a = random_psd(m, uniform_int(rng, 1, m), rng);
        const CMatrix b = randn(m, l, rng);
        const double p = uniform(rng, 0.1, 5.0);
        const CMatrix v = solve_v_power_constrained(a, b, p);
        const CMatrix ref = oracle::pg_solve_v_power(a, b, p);
        worst = std::max(worst, rel_gap(v_step_objective(a, b, v), v_step_objective(a, b, ref)));
    }
    return make("solve_v_power_vs_pg", worst, 1e-4, cases);
}

CheckResult check_v_two_vs_pg(std::mt19937_64& rng)
{
    double worst = 0.0;
    const int cases = 50;
    for (int c = 0; c < cases; ++c) {
        const int m = uniform_int(rng, 1, 4);
        const int l = uniform_int(rng, 1, m);
        const CMatrix a = random_psd(m, uniform_int(rng, 1, m), rng);
        const CMatrix b = randn(m, l, rng);
        const CMatrix j = random_psd(m, uniform_int(rng, 1, m), rng);
        const double p1 = uniform(rng, 0.1, 5.0);
        const double c2 = uniform(rng, 0.05, 5.0);
        const CMatrix v = solve_v_two_constraints(a, b, j, p1, c2);
        const CMatrix ref = oracle::pg_solve_v_two(a, b, j, p1, c2);
        worst = std::max(worst, rel_gap(v_step_objective(a, b, v), v_step_objective(a, b, ref)));
    }
    return make("solve_v_two_vs_pg", worst, 1e-4, cases);
}

CheckResult check_phi_vs_pg(std::mt19937_64& rng)
{
    double worst = 0.0;
    const int cases = 50;
    for (int c = 0; c < cases; ++c) {
        const int k = uniform_int(rng, 1, 4);
        QuadraticForm q;
        q.xi = random_psd(k, uniform_int(rng, 1, k), rng);
        q.b = randn(k, 1, rng).col(0) * uniform(rng, 0.2, 3.0);
        const CVector phi = solve_phi(q, CVector::Zero(k));
        const CVector ref = oracle::pg_solve_phi(q);
        worst = std::max(worst, rel_gap(q.evaluate(phi), q.evaluate(ref)));
    }
    return make("solve_phi_vs_pg", worst, 1e-4, cases);
}

CheckResult check_f_vs_pg(std::mt19937_64& rng)
{
    double worst = 0.0;
    const int cases = 50;
    for (int c = 0; c < cases; ++c) {
        const int m = uniform_int(rng, 2, 4);
        const int l = uniform_int(rng, 1, m);
        const int lr = uniform_int(rng, 1, 4);
        const CMatrix wr = randn(l, l, rng);
        const FQuadratic fq = build_f_quadratic(
            randn(m, m, rng), randn(lr, m, rng), randn(m, lr, rng), randn(m, l, rng),
            wr * wr.adjoint() + CMatrix::Identity(l, l), randn(m, l, rng), uniform(rng, 0.1, 1.0));
        const double p_r = uniform(rng, 0.05, 3.0);
        const CMatrix f = solve_f(fq.form, fq.D, p_r);
        const CMatrix ref = oracle::pg_solve_f(fq.form, fq.D, p_r);
        worst = std::max(worst, rel_gap(fq.form.evaluate(vec(f)), fq.form.evaluate(vec(ref))));
    }
    return make("solve_f_vs_pg", worst, 1e-4, cases);
}

// ---- optimizer-level checks ----------------------------------------------

SystemConfig desk_config()
{
    SystemConfig cfg;
    cfg.ris_elements = 16;
    return cfg;
}

CheckResult check_hdr_identity(std::uint64_t seed)
{
    const SystemConfig cfg = desk_config();
    SystemConfig doubled = cfg;
    doubled.source_power_w *= 2.0;
    doubled.relay_power_w *= 2.0;
    double worst = 0.0;
    const int cases = 3;
    for (int d = 0; d < cases; ++d) {
        const ChannelSet ch = generate_drop(cfg, derive_drop_seed(seed, d), AssistingNode::Relay);
        const RelayResult hdr = optimize_hdr(ch, cfg, {});
        const RelayResult fdr = optimize_fdr(ch, doubled, {});
        auto diff = [](const CMatrix& x, const CMatrix& y) {
            return (x - y).norm() / std::max(y.norm(), 1e-300);
        };
        worst = std::max({worst, diff(hdr.solution.V, fdr.solution.V),
                          diff(hdr.solution.F, fdr.solution.F), diff(hdr.solution.U, fdr.solution.U),
                          diff(hdr.solution.W, fdr.solution.W),
                          rel_gap(hdr.spectral_efficiency, 0.5 * fdr.spectral_efficiency)});
    }
    return make("hdr_fdr_structural_identity", worst, 1e-9, cases);
}

CheckResult check_waterfilling(std::uint64_t seed)
{
    const SystemConfig cfg = desk_config();
    SolverOptions opts;
    opts.max_outer_iters = 200;
    double worst = 0.0;
    const int cases = 5;
    for (int d = 0; d < cases; ++d) {
        const ChannelSet ch = generate_drop(cfg, derive_drop_seed(seed, d));
        const RisResult r = optimize_direct(ch, cfg, opts);
        const double wf = waterfilling_capacity(ch.direct, cfg.noise_dest_w, cfg.source_power_w);
        worst = std::max(worst, rel_gap(r.spectral_efficiency, wf));
    }
    return make("waterfilling_direct", worst, 5e-3, cases);
}

double max_rise(const std::vector<double>& chain)
{
    double worst = 0.0;
    for (std::size_t i = 1; i < chain.size(); ++i) {
        worst = std::max(worst, chain[i] - chain[i - 1]);
    }
    return worst;
}

void optimizer_checks(std::uint64_t seed, ValidationReport& report)
{
    const SystemConfig cfg = desk_config();
    double rise = 0.0;
    double violation = 0.0;
    double certificate = 0.0;
    int cases = 0;
    auto certify = [&](const IterationTrace& t) {
        for (const IterationRecord& r : t.records) {
            certificate = std::max(
                certificate,
                rel_gap((cfg.streams - r.objective) / std::numbers::ln2, r.spectral_efficiency));
        }
    };
    for (int d = 0; d < 3; ++d) {
        const std::uint64_t s = derive_drop_seed(seed, d);
        const ChannelSet surface = generate_drop(cfg, s);
        const ChannelSet relay = generate_drop(cfg, s, AssistingNode::Relay);

        const RisResult ris = optimize_ris(surface, cfg, {});
        rise = std::max(rise, max_rise(ris.trace.block_objectives));
        violation = std::max({violation, ris.solution.V.squaredNorm() - cfg.source_power_w,
                              ris.solution.phi.cwiseAbs().maxCoeff() - 1.0});
        certify(ris.trace);

        const RelayResult fdr = optimize_fdr(relay, cfg, {});
        rise = std::max(rise, max_rise(fdr.trace.block_objectives));
        violation = std::max({violation, fdr.solution.V.squaredNorm() - cfg.source_power_w,
                              fdr.relay_power - cfg.relay_power_w});
        certify(fdr.trace);

        const RelayResult hdr = optimize_hdr(relay, cfg, {});
        rise = std::max(rise, max_rise(hdr.trace.block_objectives));
        violation = std::max({violation, hdr.solution.V.squaredNorm() - 2.0 * cfg.source_power_w,
                              hdr.relay_power - 2.0 * cfg.relay_power_w});
        certify(hdr.trace);
        cases += 3;
    }
    report.checks.push_back(make("monotone_block_descent", std::max(rise, 0.0), 1e-8, cases));
    report.checks.push_back(make("output_feasibility", std::max(violation, 0.0), 1e-9, cases));
    report.checks.push_back(make("trace_rate_certificate", certificate, 1e-8, cases));
}

} // namespace

CheckResult check_phi_builder_contract(const PhiBuilder& builder, std::mt19937_64& rng,
                                       int instances)
{
    double worst = 0.0;
    for (int c = 0; c < instances; ++c) {
        const int m = uniform_int(rng, 2, 4);
        const int n = uniform_int(rng, 2, 4);
        const int l = uniform_int(rng, 1, std::min(m, n));
        const int k = uniform_int(rng, 1, 6);
        const CMatrix h_d = randn(n, m, rng);
        const CMatrix h_1 = randn(k, m, rng);
        const CMatrix h_2 = randn(n, k, rng);
        const CMatrix v = randn(m, l, rng);
        const CMatrix u = randn(n, l, rng);
        const CMatrix wr = randn(l, l, rng);
        const CMatrix w = wr * wr.adjoint() + CMatrix::Identity(l, l);
        const double sigma2 = uniform(rng, 0.1, 1.0);
        const CMatrix r_n = sigma2 * CMatrix::Identity(n, n);
        const QuadraticForm q = builder(h_d, h_1, h_2, u, w, v);

        double lo = INFINITY, hi = -INFINITY, scale = 1.0;
        for (int p = 0; p < 20; ++p) {
            const CVector phi = random_disk_point(k, rng);
            const CMatrix h = effective_channel_ris(h_d, h_1, h_2, phi);
            const double direct = (w * mse_matrix(u, h, v, r_n)).trace().real();
            const double gap = q.evaluate(phi) - direct;
            lo = std::min(lo, gap);
            hi = std::max(hi, gap);
            scale = std::max(scale, std::abs(direct));
        }
        worst = std::max(worst, (hi - lo) / scale);
    }
    return make("phi_builder_contract", worst, 1e-8, instances);
}

ValidationReport validate(std::uint64_t seed, const ValidationHooks& hooks)
{
    ValidationReport report;
    report.seed = seed;
    std::mt19937_64 rng(mix_seed(seed, 0x76616c6964ULL));
    report.checks.push_back(check_push_through(rng));
    report.checks.push_back(check_det_identity(rng));
    report.checks.push_back(check_rate_certificate(rng));
    report.checks.push_back(check_mmse_optimality(rng));
    report.checks.push_back(check_phi_builder_contract(hooks.phi_builder, rng));
    report.checks.push_back(check_f_builder_contract(rng));
    report.checks.push_back(check_v_power_vs_pg(rng));
    report.checks.push_back(check_v_two_vs_pg(rng));
    report.checks.push_back(check_phi_vs_pg(rng));
    report.checks.push_back(check_f_vs_pg(rng));
    report.checks.push_back(check_hdr_identity(seed));
    report.checks.push_back(check_waterfilling(seed));
    optimizer_checks(seed, report);
    return report;
}

} // namespace risrelay
