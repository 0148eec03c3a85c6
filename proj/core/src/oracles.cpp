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

#include "risrelay/oracles.hpp"

#include <algorithm>
#include <cmath>

namespace risrelay::oracle {

namespace {

double objective(const CMatrix& q, const CMatrix& c, const CMatrix& x)
{
    return (x.adjoint() * q * x).trace().real() + 2.0 * (c.adjoint() * x).trace().real();
}

double top_eigenvalue(const CMatrix& q)
{
    Eigen::SelfAdjointEigenSolver<CMatrix> eig(hermitian_part(q), Eigen::EigenvaluesOnly);
    return eig.eigenvalues().maxCoeff();
}

} // namespace

CMatrix projected_gradient(const CMatrix& q, const CMatrix& c, const CMatrix& x0,
                           const Projector& project, const PgOptions& opts)
{
    const double lip = std::max(top_eigenvalue(q), 1e-300);
    const double step = 1.0 / lip;
    CMatrix x = project(x0);
    CMatrix y = x;
    double t = 1.0;
    double f_x = objective(q, c, x);
    for (int it = 0; it < opts.max_iters; ++it) {
        const CMatrix grad = q * y + c;
        CMatrix next = project(y - step * grad);
        const double f_next = objective(q, c, next);
        if (f_next > f_x) {
            if (t == 1.0) {
                break;
            }
            // Restart momentum from the last accepted iterate.
            y = x;
            t = 1.0;
            continue;
        }
        const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
        const double moved = (next - x).norm();
        y = next + ((t - 1.0) / t_next) * (next - x);
        x = std::move(next);
        f_x = f_next;
        t = t_next;
        if (moved <= opts.step_tol * (1.0 + x.norm())) {
            break;
        }
    }
    return x;
}

CMatrix project_ball(const CMatrix& x, double radius_sq)
{
    const double n2 = x.squaredNorm();
    if (n2 <= radius_sq) {
        return x;
    }
    return x * std::sqrt(radius_sq / n2);
}

EllipsoidProjector::EllipsoidProjector(const CMatrix& j, double c) : c_(c)
{
    Eigen::SelfAdjointEigenSolver<CMatrix> eig(hermitian_part(j));
    basis_ = eig.eigenvectors();
    lambda_ = eig.eigenvalues().cwiseMax(0.0);
}

CMatrix EllipsoidProjector::operator()(const CMatrix& y) const
{
    const CMatrix z = basis_.adjoint() * y;
    const RVector w = z.rowwise().squaredNorm();
    auto value = [&](double nu) {
        double s = 0.0;
        for (Eigen::Index i = 0; i < w.size(); ++i) {
            const double d = 1.0 + nu * lambda_(i);
            s += lambda_(i) * w(i) / (d * d);
        }
        return s;
    };
    if (value(0.0) <= c_) {
        return y;
    }
    double lo = 0.0;
    double hi = 1.0 / std::max(lambda_.maxCoeff(), 1e-300);
    while (value(hi) > c_) {
        lo = hi;
        hi *= 2.0;
    }
    for (int it = 0; it < 300 && hi - lo > 1e-16 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (value(mid) > c_ ? lo : hi) = mid;
    }
    CMatrix scaled = z;
    for (Eigen::Index i = 0; i < w.size(); ++i) {
        scaled.row(i) /= 1.0 + hi * lambda_(i);
    }
    return basis_ * scaled;
}

CMatrix dykstra(const CMatrix& y, const Projector& first, const Projector& second, int max_iters)
{
    CMatrix x = y;
    CMatrix p = CMatrix::Zero(y.rows(), y.cols());
    CMatrix q = p;
    for (int it = 0; it < max_iters; ++it) {
        const CMatrix a = first(x + p);
        p = x + p - a;
        const CMatrix b = second(a + q);
        q = a + q - b;
        const double moved = (b - x).norm();
        x = b;
        if (moved <= 1e-15 * (1.0 + x.norm())) {
            break;
        }
    }
    return x;
}

CVector pg_solve_phi(const QuadraticForm& q, const PgOptions& opts)
{
    auto disks = [](const CMatrix& x) {
        CMatrix out = x;
        for (Eigen::Index i = 0; i < out.rows(); ++i) {
            const double mag = std::abs(out(i, 0));
            if (mag > 1.0) {
                out(i, 0) /= mag;
            }
        }
        return out;
    };
    const CMatrix x0 = CMatrix::Zero(q.b.size(), 1);
    return projected_gradient(q.xi, q.b, x0, disks, opts).col(0);
}

CMatrix pg_solve_v_power(const CMatrix& a, const CMatrix& b, double p, const PgOptions& opts)
{
    auto ball = [p](const CMatrix& x) { return project_ball(x, p); };
    return projected_gradient(a, -b, CMatrix::Zero(b.rows(), b.cols()), ball, opts);
}

CMatrix pg_solve_v_two(const CMatrix& a, const CMatrix& b, const CMatrix& j, double p1, double c2,
                       const PgOptions& opts)
{
    const EllipsoidProjector second(j, c2);
    auto ball = [p1](const CMatrix& x) { return project_ball(x, p1); };
    auto both = [&](const CMatrix& x) { return dykstra(x, ball, second); };
    return projected_gradient(a, -b, CMatrix::Zero(b.rows(), b.cols()), both, opts);
}

CMatrix pg_solve_f(const QuadraticForm& q, const CMatrix& d, double p_r, const PgOptions& opts)
{
    const Eigen::Index l = d.rows();
    // tr(F D Fᴴ) = fᴴ (Dᵀ ⊗ I) f
    const EllipsoidProjector power(kron(d.transpose(), CMatrix::Identity(l, l)), p_r);
    auto proj = [&](const CMatrix& x) { return power(x); };
    const CMatrix f = projected_gradient(q.xi, q.b, CMatrix::Zero(l * l, 1), proj, opts);
    return unvec(f.col(0), l, l);
}

} // namespace risrelay::oracle
