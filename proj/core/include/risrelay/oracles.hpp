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

#include <functional>

#include "risrelay/linalg.hpp"
#include "risrelay/subsolvers.hpp"

namespace risrelay::oracle {

// Reference minimizers built from accelerated projected gradient. They share
// no code with the KKT/coordinate-descent subsolvers and exist to cross-check
// them on small instances.

struct PgOptions {
    int max_iters = 50000;
    double step_tol = 1e-14;
};

using Projector = std::function<CMatrix(const CMatrix&)>;

// min tr(Xᴴ Q X) + 2 Re tr(Cᴴ X) over the set described by `project`.
CMatrix projected_gradient(const CMatrix& q, const CMatrix& c, const CMatrix& x0,
                           const Projector& project, const PgOptions& opts = {});

CMatrix project_ball(const CMatrix& x, double radius_sq);

// Euclidean projection onto {X : tr(Xᴴ J X) <= c} for Hermitian PSD J.
class EllipsoidProjector {
public:
    EllipsoidProjector(const CMatrix& j, double c);
    CMatrix operator()(const CMatrix& y) const;

private:
    CMatrix basis_;
    RVector lambda_;
    double c_;
};

// Dykstra's alternating projections onto the intersection of two sets.
CMatrix dykstra(const CMatrix& y, const Projector& first, const Projector& second,
                int max_iters = 2000);

CVector pg_solve_phi(const QuadraticForm& q, const PgOptions& opts = {});
CMatrix pg_solve_v_power(const CMatrix& a, const CMatrix& b, double p, const PgOptions& opts = {});
CMatrix pg_solve_v_two(const CMatrix& a, const CMatrix& b, const CMatrix& j, double p1, double c2,
                       const PgOptions& opts = {});
// Returns F (L×L).
CMatrix pg_solve_f(const QuadraticForm& q, const CMatrix& d, double p_r,
                   const PgOptions& opts = {});

} // namespace risrelay::oracle
