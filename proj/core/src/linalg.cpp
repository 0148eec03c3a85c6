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

#include "risrelay/linalg.hpp"

#include <cmath>

namespace risrelay {

void require_shape(bool ok, const std::string& what)
{
    if (!ok) {
        raise(ErrorCode::ShapeMismatch, what);
    }
}

CMatrix hermitian_part(const CMatrix& a)
{
    return (a + a.adjoint()) * 0.5;
}

double trace_re(const CMatrix& a)
{
    return a.trace().real();
}

namespace {

bool factor_ok(const Eigen::LLT<CMatrix>& llt)
{
    if (llt.info() != Eigen::Success) {
        return false;
    }
    const CMatrix& l = llt.matrixLLT();
    for (Eigen::Index i = 0; i < l.rows(); ++i) {
        const double d = l(i, i).real();
        if (!std::isfinite(d) || d <= 0.0) {
            return false;
        }
    }
    return true;
}

} // namespace

PdFactor::PdFactor(const CMatrix& a, ErrorCode on_failure)
{
    require_shape(a.rows() == a.cols(), "PdFactor: matrix is not square");
    if (a.rows() == 0) {
        llt_.compute(a);
        return;
    }
    const CMatrix h = hermitian_part(a);
    llt_.compute(h);
    if (factor_ok(llt_)) {
        return;
    }
    const double dim = static_cast<double>(h.rows());
    const double jitter = 1e-12 * trace_re(h) / dim;
    if (std::isfinite(jitter) && jitter > 0.0) {
        CMatrix shifted = h;
        shifted.diagonal().array() += jitter;
        llt_.compute(shifted);
        if (factor_ok(llt_)) {
            jittered_ = true;
            return;
        }
    }
    raise(on_failure, "matrix is not numerically Hermitian positive definite");
}

CMatrix PdFactor::inverse() const
{
    const auto n = llt_.matrixLLT().rows();
    return hermitian_part(llt_.solve(CMatrix::Identity(n, n)));
}

double PdFactor::log_det() const
{
    const CMatrix& l = llt_.matrixLLT();
    double acc = 0.0;
    for (Eigen::Index i = 0; i < l.rows(); ++i) {
        acc += std::log(l(i, i).real());
    }
    return 2.0 * acc;
}

double log_det_pd(const CMatrix& a, ErrorCode on_failure)
{
    return PdFactor(a, on_failure).log_det();
}

CMatrix inverse_pd(const CMatrix& a, ErrorCode on_failure)
{
    return PdFactor(a, on_failure).inverse();
}

CMatrix kron(const CMatrix& a, const CMatrix& b)
{
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

CVector vec(const CMatrix& a)
{
    return Eigen::Map<const CVector>(a.data(), a.size());
}

CMatrix unvec(const CVector& v, Eigen::Index rows, Eigen::Index cols)
{
    require_shape(v.size() == rows * cols, "unvec: size mismatch");
    return Eigen::Map<const CMatrix>(v.data(), rows, cols);
}

} // namespace risrelay
