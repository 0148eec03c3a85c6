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

#include "risrelay/wmmse.hpp"

namespace risrelay {

CMatrix mmse_receiver(const CMatrix& h, const CMatrix& v, const CMatrix& r_n)
{
    require_shape(h.cols() == v.rows(), "mmse_receiver: H/V mismatch");
    require_shape(r_n.rows() == h.rows() && r_n.cols() == h.rows(),
                  "mmse_receiver: R_n must be N×N");
    const CMatrix hv = h * v;
    const CMatrix cov = hv * hv.adjoint() + r_n;
    return PdFactor(cov, ErrorCode::SingularNoise).solve(hv);
}

CMatrix mse_matrix(const CMatrix& u, const CMatrix& h, const CMatrix& v, const CMatrix& r_n)
{
    require_shape(u.rows() == h.rows() && h.cols() == v.rows() && u.cols() == v.cols(),
                  "mse_matrix: shape mismatch");
    require_shape(r_n.rows() == u.rows() && r_n.cols() == u.rows(),
                  "mse_matrix: R_n must be N×N");
    CMatrix x = u.adjoint() * h * v;
    x.diagonal().array() -= 1.0;
    return hermitian_part(x * x.adjoint() + u.adjoint() * r_n * u);
}

CMatrix mmse_matrix(const CMatrix& h, const CMatrix& v, const CMatrix& r_n)
{
    require_shape(h.cols() == v.rows(), "mmse_matrix: H/V mismatch");
    require_shape(r_n.rows() == h.rows() && r_n.cols() == h.rows(),
                  "mmse_matrix: R_n must be N×N");
    const PdFactor noise(r_n, ErrorCode::SingularNoise);
    const CMatrix l = noise.lower();
    const CMatrix x = l.triangularView<Eigen::Lower>().solve(h * v);
    CMatrix s = x.adjoint() * x;
    s.diagonal().array() += 1.0;
    return inverse_pd(s, ErrorCode::SingularNoise);
}

CMatrix weight_update(const CMatrix& e)
{
    require_shape(e.rows() == e.cols(), "weight_update: E must be square");
    return inverse_pd(e, ErrorCode::SingularMse);
}

double wmmse_objective(const CMatrix& w, const CMatrix& e)
{
    require_shape(w.rows() == e.rows() && w.cols() == e.cols(), "wmmse_objective: shape mismatch");
    return (w * e).trace().real() - log_det_pd(w, ErrorCode::SingularMse);
}

WmmseState fresh_wmmse_state(const CMatrix& h, const CMatrix& v, const CMatrix& r_n)
{
    WmmseState s;
    s.U = mmse_receiver(h, v, r_n);
    s.E = mse_matrix(s.U, h, v, r_n);
    s.W = weight_update(s.E);
    s.objective = wmmse_objective(s.W, s.E);
    return s;
}

} // namespace risrelay
