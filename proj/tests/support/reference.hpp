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

// Test-only reference computations. Written against the textbook formulas
// with plain dense algebra so they share no code path with the library.
#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <random>

#include <Eigen/Dense>

namespace ref {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline CMatrix randn(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng)
{
    std::normal_distribution<double> g(0.0, std::sqrt(0.5));
    CMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < m.size(); ++i) {
        const double re = g(rng);
        m.data()[i] = Complex(re, g(rng));
    }
    return m;
}

inline CMatrix random_psd(Eigen::Index n, Eigen::Index rank, std::mt19937_64& rng)
{
    const CMatrix x = randn(n, rank, rng);
    return x * x.adjoint();
}

inline CMatrix random_pd(Eigen::Index n, std::mt19937_64& rng)
{
    return random_psd(n, n, rng) + CMatrix::Identity(n, n);
}

inline CVector random_disk(Eigen::Index n, std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    CVector v(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        v(i) = std::polar(std::sqrt(u(rng)), 2.0 * M_PI * u(rng));
    }
    return v;
}

// log2 det(I + H V Vᴴ Hᴴ R⁻¹) through a general LU determinant.
inline double rate_bits(const CMatrix& h, const CMatrix& v, const CMatrix& r_n)
{
    const Eigen::Index n = h.rows();
    const CMatrix m = CMatrix::Identity(n, n) + h * v * v.adjoint() * h.adjoint() * r_n.inverse();
    return std::log2(std::abs(m.determinant()));
}

// (UᴴHV − I)(UᴴHV − I)ᴴ + Uᴴ R U written out term by term.
inline CMatrix mse(const CMatrix& u, const CMatrix& h, const CMatrix& v, const CMatrix& r_n)
{
    const Eigen::Index l = v.cols();
    const CMatrix uh = u.adjoint();
    return uh * h * v * v.adjoint() * h.adjoint() * u - uh * h * v - v.adjoint() * h.adjoint() * u +
           CMatrix::Identity(l, l) + uh * r_n * u;
}

// tr(W E) − ln det W.
inline double wmmse(const CMatrix& w, const CMatrix& e)
{
    return (w * e).trace().real() - std::log(std::abs(w.determinant()));
}

// Central differences of a real function along every real and imaginary
// coordinate. Returns the Wirtinger gradient ∂f/∂x* scaled by 2.
inline CMatrix numeric_gradient(const std::function<double(const CMatrix&)>& f, const CMatrix& x,
                                double h = 1e-6)
{
    CMatrix g(x.rows(), x.cols());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        CMatrix p = x, m = x;
        p.data()[i] += h;
        m.data()[i] -= h;
        const double dre = (f(p) - f(m)) / (2.0 * h);
        p = x;
        m = x;
        p.data()[i] += Complex(0.0, h);
        m.data()[i] -= Complex(0.0, h);
        const double dim = (f(p) - f(m)) / (2.0 * h);
        g.data()[i] = Complex(dre, dim);
    }
    return g;
}

// Minimize a scalar function of a complex number over |z| <= radius on a
// polar grid followed by local refinement.
inline Complex grid_minimize(const std::function<double(Complex)>& f, double radius = 1.0,
                             int rings = 200, int spokes = 360)
{
    Complex best = 0.0;
    double fbest = f(best);
    for (int r = 1; r <= rings; ++r) {
        for (int s = 0; s < spokes; ++s) {
            const Complex z = std::polar(radius * r / rings, 2.0 * M_PI * s / spokes);
            const double fz = f(z);
            if (fz < fbest) {
                fbest = fz;
                best = z;
            }
        }
    }
    return best;
}

// Accelerated projected gradient for xᴴQx + 2Re(cᴴx) with a caller-supplied
// projection. Plain restarts on any objective increase.
inline double quad(const CMatrix& q, const CMatrix& c, const CMatrix& x)
{
    return (x.adjoint() * q * x).trace().real() + 2.0 * (c.adjoint() * x).trace().real();
}

inline CMatrix pg_minimize(const CMatrix& q, const CMatrix& c,
                           const std::function<CMatrix(const CMatrix&)>& project, int iters = 200000)
{
    const double lip = 2.0 * Eigen::SelfAdjointEigenSolver<CMatrix>(q).eigenvalues().cwiseAbs().maxCoeff();
    const double step = 1.0 / std::max(lip, 1e-300);
    CMatrix x = project(CMatrix::Zero(c.rows(), c.cols()));
    CMatrix y = x;
    double fx = quad(q, c, x);
    double t = 1.0;
    for (int k = 0; k < iters; ++k) {
        const CMatrix next = project(y - step * 2.0 * (q * y + c));
        const double fn = quad(q, c, next);
        if (fn > fx) {
            if (t == 1.0) {
                break;
            }
            y = x;
            t = 1.0;
            continue;
        }
        const double tn = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
        y = next + ((t - 1.0) / tn) * (next - x);
        const double moved = (next - x).norm();
        x = next;
        fx = fn;
        t = tn;
        if (moved < 1e-15 * (1.0 + x.norm())) {
            break;
        }
    }
    return x;
}

inline CMatrix ball(const CMatrix& x, double radius_sq)
{
    const double n2 = x.squaredNorm();
    return n2 <= radius_sq ? x : CMatrix(x * std::sqrt(radius_sq / n2));
}

inline CMatrix disks(const CMatrix& x)
{
    CMatrix out = x;
    for (Eigen::Index i = 0; i < out.size(); ++i) {
        const double a = std::abs(out.data()[i]);
        if (a > 1.0) {
            out.data()[i] /= a;
        }
    }
    return out;
}

} // namespace ref
