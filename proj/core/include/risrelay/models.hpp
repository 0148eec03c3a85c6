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

#include <optional>
#include <string_view>

#include "risrelay/linalg.hpp"

namespace risrelay {

enum class Scheme { Ris, Fdr, Hdr, Direct };

std::string_view to_string(Scheme s) noexcept;
// Case-insensitive; throws InvalidConfig on unknown names.
Scheme parse_scheme(std::string_view name);

// Rate scale for the two-slot half-duplex relay.
inline constexpr double kFullDuplex = 1.0;
inline constexpr double kHalfDuplex = 0.5;

struct RisSolution {
    CMatrix V;    // M×l transmit beamformer
    CVector phi;  // diagonal of Φ, |φ_k| <= 1
    CMatrix U;    // N×l receive beamformer
    CMatrix W;    // l×l weight
};

// F is the relay transmit matrix in the self-interference-free
// parametrization (G for the half-duplex relay).
struct RelaySolution {
    CMatrix V;
    CMatrix F;
    CMatrix U;
    CMatrix W;
};

// H_d + H_2·diag(phi)·H_1
CMatrix effective_channel_ris(const CMatrix& h_d, const CMatrix& h_1, const CMatrix& h_2,
                              const CVector& phi);

// H_d + H_2·F·H_1
CMatrix effective_channel_relay(const CMatrix& h_d, const CMatrix& h_1, const CMatrix& h_2,
                                const CMatrix& f);

// σ_R²·H_2 F Fᴴ H_2ᴴ + σ_D²·I_N
CMatrix noise_cov_relay(const CMatrix& h_2, const CMatrix& f, double sigma2_r, double sigma2_d);

// duplex_factor · log2 det(I_N + H V Vᴴ Hᴴ R_n⁻¹), evaluated as
// log det(I_l + Xᴴ X) with X = L⁻¹ H V and R_n = L Lᴴ.
double spectral_efficiency(const CMatrix& h, const CMatrix& v, const CMatrix& r_n,
                           double duplex_factor = kFullDuplex);

// tr(F (H_1 V Vᴴ H_1ᴴ + σ_R² I) Fᴴ)
double relay_tx_power(const CMatrix& f, const CMatrix& h_1, const CMatrix& v, double sigma2_r);

// Radiated-power efficiency in bits/Joule. RIS and DIRECT spend P_s; both
// relays spend P_s + P_r (for the half-duplex relay this is the two-slot
// average of 2P_s and 2P_r).
double energy_efficiency(double rate_bps, Scheme scheme, double p_s, double p_r);

// Realizable relay gain from the F parametrization: G = F (I + H_s F)⁻¹,
// so that (I − G H_s)⁻¹ G = F.
CMatrix recover_g(const CMatrix& f, const CMatrix& h_s);

} // namespace risrelay
