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

#include <cmath>
#include <random>

#include "reference.hpp"
#include "risrelay/models.hpp"
#include "risrelay/system_config.hpp"

using namespace risrelay;

namespace {

CMatrix scalar(Complex v)
{
    return CMatrix::Constant(1, 1, v);
}

} // namespace

TEST_CASE("ris effective channel")
{
    std::mt19937_64 rng(1);
    const CMatrix h_d = ref::randn(3, 2, rng);
    const CMatrix h_1 = ref::randn(2, 2, rng);
    const CMatrix h_2 = ref::randn(3, 2, rng);
    CHECK(effective_channel_ris(h_d, h_1, h_2, CVector::Zero(2)) == h_d);
    CHECK((effective_channel_ris(h_d, h_1, h_2, CVector::Ones(2)) - (h_d + h_2 * h_1)).norm() < 1e-14);

    CVector half(1);
    half << 0.5;
    CHECK(effective_channel_ris(scalar(1), scalar(2), scalar(3), half)(0, 0) == Complex(4.0));
}

TEST_CASE("relay effective channel")
{
    std::mt19937_64 rng(2);
    const CMatrix h_d = ref::randn(3, 2, rng);
    const CMatrix h_1 = ref::randn(4, 2, rng);
    const CMatrix h_2 = ref::randn(3, 4, rng);
    CHECK(effective_channel_relay(h_d, h_1, h_2, CMatrix::Zero(4, 4)) == h_d);
    const CMatrix prod = h_2 * h_1;
    CHECK((effective_channel_relay(h_d, h_1, h_2, CMatrix::Identity(4, 4)) - (h_d + prod)).norm() < 1e-14);
    CHECK(effective_channel_relay(scalar(1), scalar(2), scalar(3), scalar(0.5))(0, 0) == Complex(4.0));
}

TEST_CASE("surface equals a diagonal relay matrix")
{
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
        const CMatrix h_d = ref::randn(4, 3, rng);
        const CMatrix h_1 = ref::randn(6, 3, rng);
        const CMatrix h_2 = ref::randn(4, 6, rng);
        const CVector phi = ref::random_disk(6, rng);
        CHECK(effective_channel_ris(h_d, h_1, h_2, phi) ==
              effective_channel_relay(h_d, h_1, h_2, CMatrix(phi.asDiagonal())));
    }
}

TEST_CASE("shape mismatches are reported")
{
    const CMatrix a = CMatrix::Ones(2, 2);
    try {
        (void)effective_channel_ris(a, CMatrix::Ones(3, 2), CMatrix::Ones(2, 3), CVector::Ones(2));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ShapeMismatch);
    }
    CHECK_THROWS_AS((void)effective_channel_relay(a, a, a, CMatrix::Ones(3, 3)), Error);
    CHECK_THROWS_AS((void)noise_cov_relay(CMatrix::Ones(2, 3), a, 1.0, 1.0), Error);
    CHECK_THROWS_AS((void)relay_tx_power(a, CMatrix::Ones(3, 2), a, 1.0), Error);
}

TEST_CASE("relay noise covariance")
{
    std::mt19937_64 rng(4);
    const CMatrix h_2 = ref::randn(3, 4, rng);
    CHECK(noise_cov_relay(h_2, CMatrix::Zero(4, 4), 0.7, 0.2) == 0.2 * CMatrix::Identity(3, 3));
    CHECK(noise_cov_relay(scalar(2), scalar(1), 1.0, 1.0)(0, 0).real() == doctest::Approx(5.0));
    const CMatrix r = noise_cov_relay(h_2, ref::randn(4, 4, rng), 0.3, 0.1);
    CHECK((r - r.adjoint()).norm() <= 1e-12);
    CHECK(Eigen::SelfAdjointEigenSolver<CMatrix>(r).eigenvalues().minCoeff() >= 0.1 - 1e-12);
}

TEST_CASE("spectral efficiency examples")
{
    const CMatrix one = scalar(1);
    CHECK(spectral_efficiency(one, CMatrix::Zero(1, 1), one) == 0.0);
    CHECK(spectral_efficiency(one, one, one) == doctest::Approx(1.0));
    CHECK(spectral_efficiency(one, one, one, kHalfDuplex) == doctest::Approx(0.5));
    try {
        (void)spectral_efficiency(one, one, scalar(-1.0));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SingularNoise);
    }
}

TEST_CASE("spectral efficiency against a determinant oracle")
{
    std::mt19937_64 rng(5);
    for (int t = 0; t < 30; ++t) {
        const CMatrix h = ref::randn(4, 4, rng);
        const CMatrix v = ref::randn(4, 3, rng);
        const CMatrix r = ref::random_pd(4, rng);
        CHECK(spectral_efficiency(h, v, r) == doctest::Approx(ref::rate_bits(h, v, r)).epsilon(1e-10));
    }
}

TEST_CASE("spectral efficiency invariant under unitary rotation of V")
{
    std::mt19937_64 rng(6);
    for (int t = 0; t < 20; ++t) {
        const CMatrix h = ref::randn(4, 4, rng);
        const CMatrix v = ref::randn(4, 3, rng);
        const CMatrix r = ref::random_pd(4, rng);
        const CMatrix q = Eigen::HouseholderQR<CMatrix>(ref::randn(3, 3, rng)).householderQ();
        const double a = spectral_efficiency(h, v, r);
        CHECK(std::abs(spectral_efficiency(h, v * q, r) - a) <= 1e-9 * a);
    }
}

TEST_CASE("silent relay reduces to the direct link")
{
    std::mt19937_64 rng(7);
    const CMatrix h_d = ref::randn(4, 4, rng);
    const CMatrix h_1 = ref::randn(3, 4, rng);
    const CMatrix h_2 = ref::randn(4, 3, rng);
    const CMatrix v = ref::randn(4, 2, rng);
    const CMatrix f0 = CMatrix::Zero(3, 3);
    const double relay = spectral_efficiency(effective_channel_relay(h_d, h_1, h_2, f0), v,
                                             noise_cov_relay(h_2, f0, 0.5, 0.25));
    const CMatrix h_1k = ref::randn(5, 4, rng);
    const CMatrix h_2k = ref::randn(4, 5, rng);
    const double surface = spectral_efficiency(
        effective_channel_ris(h_d, h_1k, h_2k, CVector::Zero(5)), v, 0.25 * CMatrix::Identity(4, 4));
    CHECK(relay == doctest::Approx(surface).epsilon(1e-12));
}

TEST_CASE("relay transmit power")
{
    CHECK(relay_tx_power(CMatrix::Zero(2, 2), CMatrix::Ones(2, 2), CMatrix::Ones(2, 1), 1.0) == 0.0);
    CHECK(relay_tx_power(scalar(2), scalar(1), scalar(1), 1.0) == doctest::Approx(8.0));
    CHECK(relay_tx_power(CMatrix::Identity(4, 4), CMatrix::Ones(4, 2), CMatrix::Zero(2, 1), 1.0) ==
          doctest::Approx(4.0));

    std::mt19937_64 rng(8);
    const CMatrix f = ref::randn(3, 3, rng);
    const CMatrix h_1 = ref::randn(3, 4, rng);
    const CMatrix v = ref::randn(4, 2, rng);
    const CMatrix d = h_1 * v * v.adjoint() * h_1.adjoint() + 0.4 * CMatrix::Identity(3, 3);
    CHECK(relay_tx_power(f, h_1, v, 0.4) ==
          doctest::Approx((f * d * f.adjoint()).trace().real()).epsilon(1e-12));
}

TEST_CASE("energy efficiency")
{
    const double p = dbm_to_watts(43.0);
    CHECK(p == doctest::Approx(19.953).epsilon(1e-4));
    CHECK(energy_efficiency(1e9, Scheme::Ris, p, p) == doctest::Approx(5.012e7).epsilon(1e-3));
    CHECK(energy_efficiency(1e9, Scheme::Fdr, p, p) == doctest::Approx(2.506e7).epsilon(1e-3));
    CHECK(energy_efficiency(1e9, Scheme::Hdr, p, p) == doctest::Approx(2.506e7).epsilon(1e-3));
    CHECK(energy_efficiency(1e9, Scheme::Direct, p, p) == doctest::Approx(5.012e7).epsilon(1e-3));
    for (auto s : {Scheme::Ris, Scheme::Fdr, Scheme::Hdr, Scheme::Direct}) {
        CHECK(energy_efficiency(0.0, s, p, p) == 0.0);
    }
}

TEST_CASE("recover g")
{
    std::mt19937_64 rng(9);
    const CMatrix f = ref::randn(3, 3, rng);
    CHECK((recover_g(f, CMatrix::Zero(3, 3)) - f).norm() < 1e-15);

    const CMatrix g = recover_g(scalar(1), scalar(0.5));
    CHECK(g(0, 0).real() == doctest::Approx(2.0 / 3.0));
    CHECK((g(0, 0) / (1.0 - g(0, 0) * 0.5)).real() == doctest::Approx(1.0));

    for (int t = 0; t < 20; ++t) {
        const CMatrix fr = ref::randn(3, 3, rng);
        const CMatrix hs = 0.05 * ref::randn(3, 3, rng);
        const CMatrix gr = recover_g(fr, hs);
        const CMatrix back = (CMatrix::Identity(3, 3) - gr * hs).inverse() * gr;
        CHECK((back - fr).norm() <= 1e-9 * fr.norm());
    }

    try {
        (void)recover_g(scalar(1), scalar(-1));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SingularRecovery);
    }
}

TEST_CASE("scheme names round trip")
{
    for (auto s : {Scheme::Ris, Scheme::Fdr, Scheme::Hdr, Scheme::Direct}) {
        CHECK(parse_scheme(to_string(s)) == s);
    }
    CHECK(parse_scheme("fdr") == Scheme::Fdr);
    CHECK_THROWS_AS((void)parse_scheme("AF"), Error);
}

TEST_CASE("system config defaults and validation")
{
    SystemConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    CHECK(cfg.noise_dest_w == doctest::Approx(3.981e-12).epsilon(1e-3));
    CHECK(watts_to_dbm(cfg.noise_relay_w) == doctest::Approx(-84.0));
    cfg.streams = 5;
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg = SystemConfig{};
    cfg.noise_dest_w = 0.0;
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg = SystemConfig{};
    cfg.ris_elements = 0;
    CHECK_THROWS_AS(cfg.validate(), Error);
}
