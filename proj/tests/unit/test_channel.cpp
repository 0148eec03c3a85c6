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

#include "risrelay/channel.hpp"

using namespace risrelay;

namespace {

double mean_power(const CMatrix& m)
{
    return m.squaredNorm() / static_cast<double>(m.size());
}

PathLossParams params(LinkCondition c)
{
    PathLossParams p;
    p.carrier_ghz = 3.0;
    p.condition = c;
    return p;
}

} // namespace

TEST_CASE("hop distances")
{
    auto d = hop_distances({100.0, 50.0, 10.0});
    CHECK(d.d_sr == doctest::Approx(50.9902).epsilon(1e-6));
    CHECK(d.d_rd == doctest::Approx(50.9902).epsilon(1e-6));
    CHECK(d.d_sd == 100.0);

    d = hop_distances({100.0, 0.0, 10.0});
    CHECK(d.d_sr == doctest::Approx(10.0));
    CHECK(d.d_rd == doctest::Approx(100.4988).epsilon(1e-6));

    d = hop_distances({100.0, 50.0, 0.0});
    CHECK(d.d_sr == 50.0);
    CHECK(d.d_rd == 50.0);
}

TEST_CASE("umi path loss values")
{
    CHECK(pathloss_db(100.0, params(LinkCondition::Los)) == doctest::Approx(81.54).epsilon(1e-4));
    CHECK(pathloss_db(100.0, params(LinkCondition::Nlos)) == doctest::Approx(108.50).epsilon(1e-4));
    CHECK(breakpoint_distance(params(LinkCondition::Los)) == doctest::Approx(180.0).epsilon(1e-3));
}

TEST_CASE("path loss rejects short and post-breakpoint distances")
{
    try {
        (void)pathloss_db(5.0, params(LinkCondition::Los));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DistanceOutOfRange);
    }
    CHECK_THROWS_AS((void)pathloss_db(9.999, params(LinkCondition::Nlos)), Error);
    CHECK_THROWS_AS((void)pathloss_db(200.0, params(LinkCondition::Los)), Error);
    CHECK_NOTHROW((void)pathloss_db(200.0, params(LinkCondition::Nlos)));
    CHECK_NOTHROW((void)pathloss_db(10.0, params(LinkCondition::Los)));
}

TEST_CASE("path loss strictly increasing below the breakpoint")
{
    for (auto c : {LinkCondition::Los, LinkCondition::Nlos}) {
        double prev = pathloss_db(10.0, params(c));
        for (double d = 10.5; d < 180.0; d += 0.5) {
            const double pl = pathloss_db(d, params(c));
            CHECK(pl > prev);
            prev = pl;
        }
    }
}

TEST_CASE("fading second moment")
{
    std::mt19937_64 rng(42);
    double acc = 0.0;
    const int draws = 100000 / 16;
    for (int i = 0; i < draws; ++i) {
        acc += mean_power(sample_fading(4, 4, 0.0, rng));
    }
    const double m = acc / draws;
    CHECK(m >= 0.99);
    CHECK(m <= 1.01);

    std::mt19937_64 rng2(43);
    double scalar = 0.0;
    for (int i = 0; i < 100000; ++i) {
        scalar += std::norm(sample_fading(1, 1, 20.0, rng2)(0, 0));
    }
    CHECK(scalar / 100000 == doctest::Approx(0.01).epsilon(0.02));
}

TEST_CASE("fading is circular and zero mean")
{
    std::mt19937_64 rng(5);
    const CMatrix h = sample_fading(200, 200, 0.0, rng);
    const double n = static_cast<double>(h.size());
    CHECK(std::abs(h.sum()) / n < 0.01);
    CHECK(std::abs(h.array().square().sum()) / n < 0.01);
    CHECK(h.real().squaredNorm() / n == doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("fading deterministic under a fixed seed")
{
    std::mt19937_64 a(9), b(9);
    CHECK(sample_fading(2, 3, 7.0, a) == sample_fading(2, 3, 7.0, b));
}

TEST_CASE("default drop shapes and determinism")
{
    const SystemConfig cfg;
    const ChannelSet ch = generate_drop(cfg, 1234);
    CHECK(ch.direct.rows() == 4);
    CHECK(ch.direct.cols() == 4);
    CHECK(ch.first_hop.rows() == 200);
    CHECK(ch.first_hop.cols() == 4);
    CHECK(ch.second_hop.rows() == 4);
    CHECK(ch.second_hop.cols() == 200);
    CHECK_FALSE(ch.self_interference.has_value());
    CHECK(ch.drop_seed == 1234);

    const ChannelSet again = generate_drop(cfg, 1234);
    CHECK(again.direct == ch.direct);
    CHECK(again.first_hop == ch.first_hop);
    CHECK(again.second_hop == ch.second_hop);

    const ChannelSet other = generate_drop(cfg, 1235);
    CHECK(other.direct != ch.direct);
}

TEST_CASE("relay drop shapes")
{
    const SystemConfig cfg;
    const ChannelSet ch = generate_drop(cfg, 7, AssistingNode::Relay);
    CHECK(ch.first_hop.rows() == 4);
    CHECK(ch.second_hop.cols() == 4);
    REQUIRE(ch.self_interference.has_value());
    CHECK(ch.self_interference->rows() == 4);
    CHECK(ch.self_interference->cols() == 4);
    // The direct link does not depend on which node assists.
    CHECK(ch.direct == generate_drop(cfg, 7).direct);
}

TEST_CASE("per-link power matches path loss across drops")
{
    SystemConfig cfg;
    cfg.ris_elements = 8;
    const HopDistances d = hop_distances(cfg.geometry);
    const double g_d = std::pow(10.0, -pathloss_db(d.d_sd, params(LinkCondition::Nlos)) / 10.0);
    const double g_1 = std::pow(10.0, -pathloss_db(d.d_sr, params(LinkCondition::Los)) / 10.0);
    const double g_2 = std::pow(10.0, -pathloss_db(d.d_rd, params(LinkCondition::Los)) / 10.0);
    CHECK(g_d == doctest::Approx(std::pow(10.0, -10.850)).epsilon(1e-3));

    double pd = 0.0, p1 = 0.0, p2 = 0.0, ps = 0.0;
    const int drops = 3000;
    for (int i = 0; i < drops; ++i) {
        const ChannelSet ch = generate_drop(cfg, mix_seed(77, i), AssistingNode::Relay);
        pd += mean_power(ch.direct);
        p1 += mean_power(ch.first_hop);
        p2 += mean_power(ch.second_hop);
        ps += mean_power(*ch.self_interference);
    }
    CHECK(pd / drops == doctest::Approx(g_d).epsilon(0.02));
    CHECK(p1 / drops == doctest::Approx(g_1).epsilon(0.02));
    CHECK(p2 / drops == doctest::Approx(g_2).epsilon(0.02));
    CHECK(ps / drops == doctest::Approx(1e-10).epsilon(0.02));
}

TEST_CASE("drop generation propagates geometry errors")
{
    SystemConfig cfg;
    cfg.geometry.d_1 = 2.0;
    cfg.geometry.d_r = 2.0;
    try {
        (void)generate_drop(cfg, 1);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DistanceOutOfRange);
    }
}

TEST_CASE("seed mixing")
{
    CHECK(mix_seed(1, 2) == mix_seed(1, 2));
    CHECK(mix_seed(1, 2) != mix_seed(2, 1));
    CHECK(mix_seed(0, 0) != mix_seed(0, 1));
}
