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

#include <doctest.h>

#include <random>

#include "reference.hpp"
#include "risrelay/linalg.hpp"

using namespace risrelay;

TEST_CASE("pd factor solves and inverts")
{
    std::mt19937_64 rng(11);
    const CMatrix a = ref::random_pd(5, rng);
    const PdFactor f(a, ErrorCode::SingularNoise);
    CHECK_FALSE(f.jittered());
    const CMatrix b = ref::randn(5, 2, rng);
    CHECK((a * f.solve(b) - b).norm() < 1e-12 * b.norm() * a.norm());
    CHECK((f.inverse() * a - CMatrix::Identity(5, 5)).norm() < 1e-11);
    CHECK(f.log_det() == doctest::Approx(std::log(std::abs(a.determinant()))).epsilon(1e-12));
    CHECK((f.lower() * f.lower().adjoint() - a).norm() < 1e-12 * a.norm());
}

TEST_CASE("pd factor jitters a singular psd matrix once")
{
    CMatrix a = CMatrix::Zero(2, 2);
    a(0, 0) = 1.0;
    const PdFactor f(a, ErrorCode::SingularMse);
    CHECK(f.jittered());
}

TEST_CASE("pd factor raises on an indefinite matrix")
{
    CMatrix a = CMatrix::Identity(2, 2);
    a(1, 1) = -1.0;
    try {
        PdFactor f(a, ErrorCode::SingularNoise);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SingularNoise);
    }
    CHECK_THROWS_AS(inverse_pd(a, ErrorCode::SingularMse), Error);
}

TEST_CASE("kron and vec follow the column-major identity")
{
    std::mt19937_64 rng(3);
    const CMatrix a = ref::randn(2, 3, rng);
    const CMatrix x = ref::randn(3, 4, rng);
    const CMatrix b = ref::randn(4, 2, rng);
    // vec(A X B) = (Bᵀ ⊗ A) vec(X)
    const CVector lhs = vec(a * x * b);
    const CVector rhs = kron(b.transpose(), a) * vec(x);
    CHECK((lhs - rhs).norm() < 1e-12 * lhs.norm());
    CHECK((unvec(vec(x), 3, 4) - x).norm() == 0.0);
    CHECK(vec(x)(1) == x(1, 0));
}

TEST_CASE("hermitian part and real trace")
{
    CMatrix a(2, 2);
    a << Complex(1, 1), Complex(2, 0), Complex(0, 4), Complex(3, -2);
    const CMatrix h = hermitian_part(a);
    CHECK((h - h.adjoint()).norm() == 0.0);
    CHECK(trace_re(a) == doctest::Approx(4.0));
}

TEST_CASE("shape guard")
{
    CHECK_NOTHROW(require_shape(true, "ok"));
    try {
        require_shape(false, "H_1 rows");
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ShapeMismatch);
        CHECK(std::string(e.what()).find("H_1 rows") != std::string::npos);
    }
}
