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

#include "risrelay/subsolvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace risrelay {

double QuadraticForm::evaluate(const CVector& x) const
{
    return x.dot(xi * x).real() + 2.0 * b.dot(x).real();
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kMaxBisection = 200;
constexpr int kMaxDoubling = 1000;

// Solutions of (S + μI) X = R for Hermitian PSD S, parametrized by μ >= 0
// through one eigen-decomposition. Directions with (numerically) zero
// eigenvalue are dropped when R has no component along them (minimum-norm
// solution) and make the curve unbounded at μ = 0 otherwise.
class SpectralCurve {
public:
    SpectralCurve(const CMatrix& s, const CMatrix& r)
    {
        Eigen::SelfAdjointEigenSolver<CMatrix> eig(hermitian_part(s));
        basis_ = eig.eigenvectors();
        lambda_ = eig.eigenvalues().cwiseMax(0.0);
        coeff_ = basis_.adjoint() * r;
        weight_ = coeff_.rowwise().squaredNorm();
        const double top = lambda_.size() > 0 ? lambda_.maxCoeff() : 0.0;
        zero_tol_ = 1e-13 * top;
        const double total = weight_.sum();
        significant_.resize(weight_.size());
        for (Eigen::Index i = 0; i < weight_.size(); ++i) {
            significant_[i] = weight_(i) > 1e-20 * total;
        }
    }

    // ‖X(μ)‖_F²
    double power(double mu) const
    {
        double p = 0.0;
        for (Eigen::Index i = 0; i < lambda_.size(); ++i) {
            const double denom = lambda_(i) + mu;
            if (denom <= zero_tol_) {
                if (significant_[i]) {
                    return kInf;
                }
                continue;
            }
            p += weight_(i) / (denom * denom);
        }
        return p;
    }

    CMatrix solution(double mu) const
    {
        CMatrix scaled = coeff_;
        for (Eigen::Index i = 0; i < lambda_.size(); ++i) {
            const double denom = lambda_(i) + mu;
            scaled.row(i) *= denom <= zero_tol_ ? 0.0 : 1.0 / denom;
        }
        return basis_ * scaled;
    }

    double rhs_norm() const { return std::sqrt(weight_.sum()); }

private:
    CMatrix basis_;
    RVector lambda_;
    CMatrix coeff_;
    RVector weight_;
    std::vector<bool> significant_;
    double zero_tol_ = 0.0;
};

// Smallest μ >= 0 (up to bisection resolution) with g(μ) <= target for a
// non-increasing g. Returns the feasible end of the final bracket, or a
// negative value when no feasible μ was found.
template <class G>
double bisect_multiplier(G&& g, double target, double mu_hi)
{
    if (g(0.0) <= target) {
        return 0.0;
    }
    double lo = 0.0;
    double hi = mu_hi > 0.0 && std::isfinite(mu_hi) ? mu_hi : 1.0;
    double g_hi = g(hi);
    int doublings = 0;
    while (!(g_hi <= target)) {
        if (++doublings > kMaxDoubling) {
            return -1.0;
        }
        lo = hi;
        hi *= 2.0;
        g_hi = g(hi);
    }
    for (int it = 0; it < kMaxBisection; ++it) {
        if (hi - lo <= 1e-15 * hi || target - g_hi <= 1e-13 * target) {
            break;
        }
        const double mid = 0.5 * (lo + hi);
        const double g_mid = g(mid);
        if (g_mid <= target) {
            hi = mid;
            g_hi = g_mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

double quad_form_re(const CMatrix& v, const CMatrix& j)
{
    return (v.adjoint() * j * v).trace().real();
}

CMatrix zero_like(const CMatrix& b)
{
    return CMatrix::Zero(b.rows(), b.cols());
}

// Power-constrained minimizer for the curve attached to S = A + extra.
VStepSolution power_step(const SpectralCurve& curve, double p, double mu_second)
{
    const double start = curve.rhs_norm() / std::sqrt(p);
    const double mu = bisect_multiplier([&](double m) { return curve.power(m); }, p, start);
    VStepSolution out;
    out.mu_second = mu_second;
    if (mu < 0.0) {
        out.V = CMatrix::Zero(0, 0);
        return out;
    }
    out.mu_power = mu;
    out.V = curve.solution(mu);
    return out;
}

} // namespace

double v_step_objective(const CMatrix& a, const CMatrix& b, const CMatrix& v)
{
    return quad_form_re(v, a) - 2.0 * (b.adjoint() * v).trace().real();
}

VStepSolution solve_v_power_constrained_kkt(const CMatrix& a, const CMatrix& b, double p)
{
    require_shape(a.rows() == a.cols() && a.rows() == b.rows(),
                  "solve_v_power_constrained: A must be M×M and B M×l");
    if (b.squaredNorm() == 0.0 || !(p > 0.0)) {
        return VStepSolution{zero_like(b), 0.0, 0.0};
    }
    const SpectralCurve curve(a, b);
    VStepSolution out = power_step(curve, p, 0.0);
    if (out.V.size() == 0) {
        out.V = zero_like(b);
    }
    return out;
}

CMatrix solve_v_power_constrained(const CMatrix& a, const CMatrix& b, double p)
{
    return solve_v_power_constrained_kkt(a, b, p).V;
}

namespace {

// Minimizer restricted to null(J) with the power constraint, used when the
// second budget is exactly exhausted (c2 == 0).
VStepSolution null_space_step(const CMatrix& a, const CMatrix& b, const CMatrix& j, double p1)
{
    Eigen::SelfAdjointEigenSolver<CMatrix> eig(hermitian_part(j));
    const RVector& ev = eig.eigenvalues();
    const double tol = 1e-13 * std::max(ev.cwiseAbs().maxCoeff(), 0.0);
    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        if (ev(i) <= tol) {
            keep.push_back(i);
        }
    }
    if (keep.empty()) {
        return VStepSolution{zero_like(b), 0.0, 0.0};
    }
    CMatrix basis(a.rows(), static_cast<Eigen::Index>(keep.size()));
    for (std::size_t c = 0; c < keep.size(); ++c) {
        basis.col(static_cast<Eigen::Index>(c)) = eig.eigenvectors().col(keep[c]);
    }
    const CMatrix a_r = basis.adjoint() * a * basis;
    const CMatrix b_r = basis.adjoint() * b;
    VStepSolution inner = solve_v_power_constrained_kkt(a_r, b_r, p1);
    inner.V = basis * inner.V;
    return inner;
}

} // namespace

VStepSolution solve_v_two_constraints_kkt(const CMatrix& a, const CMatrix& b, const CMatrix& j,
                                          double p1, double c2)
{
    require_shape(a.rows() == a.cols() && a.rows() == b.rows() && j.rows() == a.rows() &&
                      j.cols() == a.cols(),
                  "solve_v_two_constraints: A and J must be M×M and B M×l");
    if (c2 < 0.0) {
        raise(ErrorCode::InfeasibleSubproblem, "second budget c2 is negative");
    }
    if (b.squaredNorm() == 0.0 || !(p1 > 0.0)) {
        return VStepSolution{zero_like(b), 0.0, 0.0};
    }
    const CMatrix jh = hermitian_part(j);
    if (c2 == 0.0) {
        return null_space_step(a, b, jh, p1);
    }

    auto feasible_second = [&](const CMatrix& v) { return quad_form_re(v, jh) <= c2; };

    // First constraint alone (this also covers the unconstrained point, which
    // it returns when feasible).
    const SpectralCurve base(a, b);
    VStepSolution first = power_step(base, p1, 0.0);
    if (first.V.size() != 0 && feasible_second(first.V)) {
        return first;
    }

    // Second constraint alone, μ₁ = 0.
    const double scale = std::max(hermitian_part(a).norm(), 1e-300) /
                         std::max(jh.norm(), 1e-300);
    auto second_only = [&](double mu2) { return SpectralCurve(a + mu2 * jh, b); };
    {
        const double mu2 = bisect_multiplier(
            [&](double m) {
                const SpectralCurve c = second_only(m);
                if (!std::isfinite(c.power(0.0))) {
                    return kInf;
                }
                return quad_form_re(c.solution(0.0), jh);
            },
            c2, scale);
        if (mu2 >= 0.0) {
            const SpectralCurve c = second_only(mu2);
            if (c.power(0.0) <= p1) {
                return VStepSolution{c.solution(0.0), 0.0, mu2};
            }
        }
    }

    // Both active: outer bisection on μ₂, inner bisection on μ₁.
    auto inner = [&](double mu2) {
        const SpectralCurve c(a + mu2 * jh, b);
        VStepSolution s = power_step(c, p1, mu2);
        if (s.V.size() == 0) {
            s.V = zero_like(b);
        }
        return s;
    };
    const double mu2 = bisect_multiplier(
        [&](double m) { return quad_form_re(inner(m).V, jh); }, c2, scale);
    if (mu2 < 0.0) {
        return null_space_step(a, b, jh, p1);
    }
    return inner(mu2);
}

CMatrix solve_v_two_constraints(const CMatrix& a, const CMatrix& b, const CMatrix& j, double p1,
                                double c2)
{
    return solve_v_two_constraints_kkt(a, b, j, p1, c2).V;
}

// ---- Φ ------------------------------------------------------------------

QuadraticForm build_phi_quadratic(const CMatrix& h_d, const CMatrix& h_1, const CMatrix& h_2,
                                  const CMatrix& u, const CMatrix& w, const CMatrix& v)
{
    require_shape(h_1.rows() == h_2.cols(), "build_phi_quadratic: K mismatch");
    require_shape(h_d.rows() == h_2.rows() && h_d.cols() == h_1.cols(),
                  "build_phi_quadratic: N/M mismatch");
    require_shape(u.rows() == h_d.rows() && v.rows() == h_d.cols() && u.cols() == v.cols() &&
                      w.rows() == v.cols() && w.cols() == v.cols(),
                  "build_phi_quadratic: U/V/W mismatch");

    const CMatrix g1 = h_1 * v;               // K×l
    const CMatrix g2 = h_2.adjoint() * u;     // K×l
    const CMatrix c = g2 * w * g2.adjoint();  // H_2ᴴ U W Uᴴ H_2
    const CMatrix q = g1 * g1.adjoint();      // H_1 V Vᴴ H_1ᴴ

    CMatrix mid = v.adjoint() * h_d.adjoint() * u;
    mid.diagonal().array() -= 1.0;
    const CMatrix left = g1 * (mid * w);      // K×l, rows of B before Uᴴ H_2

    QuadraticForm out;
    out.xi = hermitian_part(c.cwiseProduct(q.transpose()));
    out.b = left.cwiseProduct(g2.conjugate()).rowwise().sum().conjugate();
    return out;
}

PhiSolveReport solve_phi_detailed(const QuadraticForm& q, const CVector& phi0,
                                  const PhiSolverOptions& opts)
{
    const Eigen::Index k = q.b.size();
    require_shape(q.xi.rows() == k && q.xi.cols() == k && phi0.size() == k,
                  "solve_phi: dimension mismatch");

    PhiSolveReport out;
    out.phi = phi0;
    CVector& phi = out.phi;
    CVector grad = q.xi * phi;  // Ξ φ

    double curvature_floor = 0.0;
    for (Eigen::Index i = 0; i < k; ++i) {
        curvature_floor = std::max(curvature_floor, q.xi(i, i).real());
    }
    curvature_floor *= 1e-14;

    auto objective = [&] { return phi.dot(grad).real() + 2.0 * q.b.dot(phi).real(); };
    double current = objective();

    for (int cycle = 1; cycle <= opts.max_cycles; ++cycle) {
        for (Eigen::Index i = 0; i < k; ++i) {
            const double xii = q.xi(i, i).real();
            const Complex cross = grad(i) - xii * phi(i) + q.b(i);
            Complex next = phi(i);
            if (xii > curvature_floor) {
                next = -cross / xii;
                const double mag = std::abs(next);
                if (mag > 1.0) {
                    next /= mag;
                }
            } else if (std::abs(cross) > 0.0) {
                next = -cross / std::abs(cross);
            }
            const Complex delta = next - phi(i);
            if (delta != Complex(0.0, 0.0)) {
                grad += q.xi.col(i) * delta;
                phi(i) = next;
            }
        }
        const double updated = objective();
        const double gain = current - updated;
        current = updated;
        out.cycles = cycle;
        if (gain <= opts.rel_tol * std::abs(updated)) {
            out.converged = true;
            break;
        }
    }
    // Refresh from scratch so the reported value carries no drift from the
    // incremental gradient updates.
    grad = q.xi * phi;
    out.objective = objective();
    return out;
}

CVector solve_phi(const QuadraticForm& q, const CVector& phi0, const PhiSolverOptions& opts)
{
    return solve_phi_detailed(q, phi0, opts).phi;
}

// ---- F ------------------------------------------------------------------

FQuadratic build_f_quadratic(const CMatrix& h_d, const CMatrix& h_1, const CMatrix& h_2,
                             const CMatrix& u, const CMatrix& w, const CMatrix& v,
                             double sigma2_r)
{
    require_shape(h_1.rows() == h_2.cols(), "build_f_quadratic: L mismatch");
    require_shape(h_d.rows() == h_2.rows() && h_d.cols() == h_1.cols(),
                  "build_f_quadratic: N/M mismatch");
    require_shape(u.rows() == h_d.rows() && v.rows() == h_d.cols() && u.cols() == v.cols() &&
                      w.rows() == v.cols() && w.cols() == v.cols(),
                  "build_f_quadratic: U/V/W mismatch");

    const Eigen::Index l = h_1.rows();
    const CMatrix g1 = h_1 * v;
    const CMatrix g2 = h_2.adjoint() * u;
    const CMatrix c = hermitian_part(g2 * w * g2.adjoint());
    const CMatrix q = hermitian_part(g1 * g1.adjoint());
    const CMatrix eye = CMatrix::Identity(l, l);

    CMatrix mid = v.adjoint() * h_d.adjoint() * u;
    mid.diagonal().array() -= 1.0;
    const CMatrix b_mat = g1 * mid * w * g2.adjoint();

    FQuadratic out;
    out.form.xi = hermitian_part(kron(q.transpose(), c) + sigma2_r * kron(eye, c));
    out.form.b = vec(b_mat.adjoint());
    out.D = q + sigma2_r * eye;
    return out;
}

double f_power(const CVector& f, const CMatrix& d)
{
    const Eigen::Index l = d.rows();
    require_shape(d.cols() == l && f.size() == l * l, "f_power: dimension mismatch");
    const CMatrix fm = unvec(f, l, l);
    return (fm * d * fm.adjoint()).trace().real();
}

FStepSolution solve_f_kkt(const QuadraticForm& q, const CMatrix& d, double p_r)
{
    const Eigen::Index l = d.rows();
    const Eigen::Index n = l * l;
    require_shape(d.cols() == l && q.xi.rows() == n && q.xi.cols() == n && q.b.size() == n,
                  "solve_f: dimension mismatch");

    FStepSolution out;
    if (q.b.squaredNorm() == 0.0 || !(p_r > 0.0)) {
        out.F = CMatrix::Zero(l, l);
        return out;
    }

    // Whitening with K = Dᵀ ⊗ I = Lk Lkᴴ turns the constraint into a ball:
    // g = Lkᴴ f, fᴴKf = ‖g‖².
    const CMatrix k = kron(d.transpose(), CMatrix::Identity(l, l));
    const PdFactor kf(k, ErrorCode::DegenerateForm);
    const CMatrix lk = kf.lower();
    const auto lower = lk.triangularView<Eigen::Lower>();
    const CMatrix tmp = lower.solve(q.xi);
    const CMatrix xi_w = hermitian_part(lower.solve(tmp.adjoint()).adjoint());
    const CVector b_w = lower.solve(q.b);

    // A singular Ξ needs no jitter here: at λ = 0 the curve takes the
    // minimum-norm solution when b lies in range(Ξ) and is unbounded (forcing
    // λ > 0) otherwise.
    const SpectralCurve curve(xi_w, b_w);
    auto power = [&](double lambda) {
        const double p = curve.power(lambda);
        out.trajectory.emplace_back(lambda, p);
        return p;
    };
    const double lambda = bisect_multiplier(power, p_r, curve.rhs_norm() / std::sqrt(p_r));
    if (lambda < 0.0) {
        raise(ErrorCode::DegenerateForm, "no feasible multiplier for the F-step");
    }
    const CVector g = -curve.solution(lambda);
    const CVector f = lower.adjoint().solve(g);
    if (!f.allFinite()) {
        raise(ErrorCode::DegenerateForm, "F-step produced non-finite entries");
    }
    out.F = unvec(f, l, l);
    out.multiplier = lambda;
    out.power = f_power(f, d);
    return out;
}

CMatrix solve_f(const QuadraticForm& q, const CMatrix& d, double p_r)
{
    return solve_f_kkt(q, d, p_r).F;
}

} // namespace risrelay
