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

#include <utility>
#include <vector>

#include "risrelay/linalg.hpp"

namespace risrelay {

// q(x) = xᴴ Ξ x + 2 Re(bᴴ x)
struct QuadraticForm {
    CMatrix xi;
    CVector b;

    double evaluate(const CVector& x) const;
};

// ---- transmit beamformer ------------------------------------------------

// tr(Vᴴ A V) − 2 Re tr(Bᴴ V)
double v_step_objective(const CMatrix& a, const CMatrix& b, const CMatrix& v);

// Minimizer with its KKT multipliers: (A + μ₁I + μ₂J) V = B.
struct VStepSolution {
    CMatrix V;
    double mu_power = 0.0;
    double mu_second = 0.0;
};

// min tr(VᴴAV) − 2Re tr(BᴴV)  s.t.  tr(VVᴴ) <= P.
// Multiplier found by bisection on the eigen-decomposed power curve; when A
// is singular and B lies in its range the minimum-norm solution is used.
VStepSolution solve_v_power_constrained_kkt(const CMatrix& a, const CMatrix& b, double p);
CMatrix solve_v_power_constrained(const CMatrix& a, const CMatrix& b, double p);

// As above with the additional constraint tr(Vᴴ J V) <= c2. Tries the
// unconstrained point, then each single-constraint solution against the
// other constraint, then nested bisection on (μ₁, μ₂).
// Throws InfeasibleSubproblem if c2 < 0.
VStepSolution solve_v_two_constraints_kkt(const CMatrix& a, const CMatrix& b, const CMatrix& j,
                                          double p1, double c2);
CMatrix solve_v_two_constraints(const CMatrix& a, const CMatrix& b, const CMatrix& j, double p1,
                                double c2);

// ---- reflection coefficients --------------------------------------------

// Quadratic form in φ = diag(Φ) that differs from tr(W E) at Φ = diag(φ)
// (white R_n) by a φ-independent constant:
//   Ξ = (H_2ᴴ U W Uᴴ H_2) ∘ (H_1 V Vᴴ H_1ᴴ)ᵀ
//   b = conj(diag(H_1 V (Vᴴ H_dᴴ U − I) W Uᴴ H_2))
QuadraticForm build_phi_quadratic(const CMatrix& h_d, const CMatrix& h_1, const CMatrix& h_2,
                                  const CMatrix& u, const CMatrix& w, const CMatrix& v);

struct PhiSolverOptions {
    int max_cycles = 500;
    double rel_tol = 1e-8;
};

struct PhiSolveReport {
    CVector phi;
    double objective = 0.0;
    int cycles = 0;
    bool converged = false;
};

// Cyclic coordinate descent over the product of unit disks, ascending index
// order, warm-started at phi0. Each coordinate takes its exact minimizer
// clipped to the disk; a zero-curvature coordinate moves to the boundary
// point opposing its linear term.
PhiSolveReport solve_phi_detailed(const QuadraticForm& q, const CVector& phi0,
                                  const PhiSolverOptions& opts = {});
CVector solve_phi(const QuadraticForm& q, const CVector& phi0, const PhiSolverOptions& opts = {});

// ---- relay transmit matrix ----------------------------------------------

// Vectorized F-step with f = vec(F) (column-major):
//   Ξ = (H_1VVᴴH_1ᴴ)ᵀ ⊗ C + σ_R² (I ⊗ C),  C = H_2ᴴ U W Uᴴ H_2
//   b = vec(Bᴴ),  B = H_1 V (Vᴴ H_dᴴ U − I) W Uᴴ H_2
//   D = H_1 V Vᴴ H_1ᴴ + σ_R² I
struct FQuadratic {
    QuadraticForm form;
    CMatrix D;
};

FQuadratic build_f_quadratic(const CMatrix& h_d, const CMatrix& h_1, const CMatrix& h_2,
                             const CMatrix& u, const CMatrix& w, const CMatrix& v,
                             double sigma2_r);

// fᴴ (Dᵀ ⊗ I) f, which equals tr(F D Fᴴ) for F = unvec(f).
double f_power(const CVector& f, const CMatrix& d);

struct FStepSolution {
    CMatrix F;
    double multiplier = 0.0;
    double power = 0.0;
    // (λ, p(λ)) for every power evaluation made during the bracket search
    // and bisection, in evaluation order.
    std::vector<std::pair<double, double>> trajectory;
};

// min fᴴΞf + 2Re(bᴴf)  s.t.  tr(F D Fᴴ) <= P_r.
// f(λ) = −(Ξ + λ(Dᵀ⊗I))⁻¹ b with λ by bisection.
FStepSolution solve_f_kkt(const QuadraticForm& q, const CMatrix& d, double p_r);
CMatrix solve_f(const QuadraticForm& q, const CMatrix& d, double p_r);

} // namespace risrelay
