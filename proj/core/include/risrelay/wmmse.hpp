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

#include "risrelay/linalg.hpp"

namespace risrelay {

// Receiver, weight and MSE at a fixed (H, V, R_n).
struct WmmseState {
    CMatrix U;  // N×l
    CMatrix W;  // l×l, Hermitian PD
    CMatrix E;  // l×l, Hermitian PD
    double objective = 0.0;  // tr(WE) − ln det W
};

// U = (H V Vᴴ Hᴴ + R_n)⁻¹ H V
CMatrix mmse_receiver(const CMatrix& h, const CMatrix& v, const CMatrix& r_n);

// E(U) = (Uᴴ H V − I)(Uᴴ H V − I)ᴴ + Uᴴ R_n U
CMatrix mse_matrix(const CMatrix& u, const CMatrix& h, const CMatrix& v, const CMatrix& r_n);

// E at the MMSE receiver, I − Vᴴ Hᴴ R_n⁻¹ (H V Vᴴ Hᴴ R_n⁻¹ + I)⁻¹ H V.
// Evaluated in the equivalent form (I + Vᴴ Hᴴ R_n⁻¹ H V)⁻¹, which keeps
// full relative accuracy when the error is small.
CMatrix mmse_matrix(const CMatrix& h, const CMatrix& v, const CMatrix& r_n);

// W = E⁻¹
CMatrix weight_update(const CMatrix& e);

// tr(W E) − ln det W
double wmmse_objective(const CMatrix& w, const CMatrix& e);

// U from mmse_receiver, E = mse_matrix(U), W = E⁻¹.
WmmseState fresh_wmmse_state(const CMatrix& h, const CMatrix& v, const CMatrix& r_n);

} // namespace risrelay
