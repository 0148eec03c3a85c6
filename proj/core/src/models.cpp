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

#include "risrelay/models.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <string>

namespace risrelay {

std::string_view to_string(Scheme s) noexcept
{
    switch (s) {
    case Scheme::Ris: return "RIS";
    case Scheme::Fdr: return "FDR";
    case Scheme::Hdr: return "HDR";
    case Scheme::Direct: return "DIRECT";
    }
    return "?";
}

Scheme parse_scheme(std::string_view name)
{
    std::string up(name);
    std::transform(up.begin(), up.end(), up.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    for (Scheme s : {Scheme::Ris, Scheme::Fdr, Scheme::Hdr, Scheme::Direct}) {
        if (up == to_string(s)) {
            return s;
        }
    }
    raise(ErrorCode::InvalidConfig, "unknown scheme '" + std::string(name) + "'");
}

CMatrix effective_channel_ris(const CMatrix& h_d, const CMatrix& h_1, const CMatrix& h_2,
                              const CVector& phi)
{
    require_shape(h_2.cols() == phi.size() && h_1.rows() == phi.size(),
                  "effective_channel_ris: K mismatch");
    require_shape(h_2.rows() == h_d.rows() && h_1.cols() == h_d.cols(),
                  "effective_channel_ris: N/M mismatch");
    return h_d + h_2 * phi.asDiagonal() * h_1;
}

CMatrix effective_channel_relay(const CMatrix& h_d, const CMatrix& h_1, const CMatrix& h_2,
                                const CMatrix& f)
{
    require_shape(f.rows() == h_2.cols() && f.cols() == h_1.rows(),
                  "effective_channel_relay: L mismatch");
    require_shape(h_2.rows() == h_d.rows() && h_1.cols() == h_d.cols(),
                  "effective_channel_relay: N/M mismatch");
    return h_d + h_2 * f * h_1;
}

CMatrix noise_cov_relay(const CMatrix& h_2, const CMatrix& f, double sigma2_r, double sigma2_d)
{
    require_shape(h_2.cols() == f.rows(), "noise_cov_relay: L mismatch");
    const CMatrix g = h_2 * f;
    CMatrix r = sigma2_r * (g * g.adjoint());
    r.diagonal().array() += sigma2_d;
    return hermitian_part(r);
}

double spectral_efficiency(const CMatrix& h, const CMatrix& v, const CMatrix& r_n,
                           double duplex_factor)
{
    require_shape(h.cols() == v.rows(), "spectral_efficiency: H/V mismatch");
    require_shape(r_n.rows() == h.rows() && r_n.cols() == h.rows(),
                  "spectral_efficiency: R_n must be N×N");
    const PdFactor noise(r_n, ErrorCode::SingularNoise);
    const CMatrix l = noise.lower();
    const CMatrix x = l.triangularView<Eigen::Lower>().solve(h * v);
    CMatrix s = x.adjoint() * x;
    s.diagonal().array() += 1.0;
    const double nats = log_det_pd(s, ErrorCode::SingularNoise);
    return duplex_factor * std::max(0.0, nats / std::numbers::ln2);
}

double relay_tx_power(const CMatrix& f, const CMatrix& h_1, const CMatrix& v, double sigma2_r)
{
    require_shape(f.cols() == h_1.rows() && h_1.cols() == v.rows(),
                  "relay_tx_power: shape mismatch");
    const CMatrix signal = f * (h_1 * v);
    return std::max(0.0, signal.squaredNorm() + sigma2_r * f.squaredNorm());
}

double energy_efficiency(double rate_bps, Scheme scheme, double p_s, double p_r)
{
    if (rate_bps <= 0.0) {
        return 0.0;
    }
    const bool relay = scheme == Scheme::Fdr || scheme == Scheme::Hdr;
    return rate_bps / (relay ? p_s + p_r : p_s);
}

CMatrix recover_g(const CMatrix& f, const CMatrix& h_s)
{
    require_shape(f.rows() == f.cols() && h_s.rows() == f.rows() && h_s.cols() == f.cols(),
                  "recover_g: F and H_s must be L×L");
    const auto n = f.rows();
    const CMatrix m = CMatrix::Identity(n, n) + h_s * f;
    const Eigen::PartialPivLU<CMatrix> lu(m);
    if (!(lu.rcond() > 1e-13)) {
        raise(ErrorCode::SingularRecovery, "I + H_s F is numerically singular");
    }
    // G = F M⁻¹  <=>  Mᴴ Gᴴ = Fᴴ
    const CMatrix gt = m.adjoint().partialPivLu().solve(f.adjoint());
    return gt.adjoint();
}

} // namespace risrelay
