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

#include <complex>
#include <string>

#include <Eigen/Dense>

#include "risrelay/errors.hpp"

namespace risrelay {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};

// Throws ShapeMismatch with `what` unless `ok`.
void require_shape(bool ok, const std::string& what);

// (A + Aᴴ)/2
CMatrix hermitian_part(const CMatrix& a);

// Real part of the trace.
double trace_re(const CMatrix& a);

// Cholesky factor of a Hermitian positive-definite matrix. If the first
// attempt fails, a diagonal jitter of 1e-12·tr(A)/dim is added once; a
// second failure raises `on_failure`.
class PdFactor {
public:
    PdFactor(const CMatrix& a, ErrorCode on_failure);

    CMatrix solve(const CMatrix& b) const { return llt_.solve(b); }
    CMatrix inverse() const;
    // Natural log of the determinant.
    double log_det() const;
    // The lower-triangular factor L with A = L Lᴴ.
    CMatrix lower() const { return llt_.matrixL(); }
    bool jittered() const noexcept { return jittered_; }

private:
    Eigen::LLT<CMatrix> llt_;
    bool jittered_ = false;
};

double log_det_pd(const CMatrix& a, ErrorCode on_failure);
CMatrix inverse_pd(const CMatrix& a, ErrorCode on_failure);

CMatrix kron(const CMatrix& a, const CMatrix& b);

// Column-major vectorization and its inverse.
CVector vec(const CMatrix& a);
CMatrix unvec(const CVector& v, Eigen::Index rows, Eigen::Index cols);

} // namespace risrelay
