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

#include "risrelay/channel.hpp"

#include <cmath>
#include <sstream>

namespace risrelay {

HopDistances hop_distances(const Geometry& g)
{
    const double far = g.d_sd - g.d_1;
    return HopDistances{std::hypot(g.d_1, g.d_r), std::hypot(far, g.d_r), g.d_sd};
}

double breakpoint_distance(const PathLossParams& p)
{
    constexpr double c = 299792458.0;
    const double hb = p.bs_height_m - 1.0;
    const double hu = p.ut_height_m - 1.0;
    return 4.0 * hb * hu * p.carrier_ghz * 1e9 / c;
}

double pathloss_db(double d, const PathLossParams& p)
{
    if (!(d >= kMinPathLossDistance)) {
        std::ostringstream os;
        os << "path loss undefined for d = " << d << " m (< 10 m)";
        raise(ErrorCode::DistanceOutOfRange, os.str());
    }
    const double lf = std::log10(p.carrier_ghz);
    if (p.condition == LinkCondition::Nlos) {
        return 36.7 * std::log10(d) + 22.7 + 26.0 * lf;
    }
    const double bp = breakpoint_distance(p);
    if (d >= bp) {
        std::ostringstream os;
        os << "LOS distance " << d << " m is beyond the breakpoint " << bp << " m";
        raise(ErrorCode::DistanceOutOfRange, os.str());
    }
    return 22.0 * std::log10(d) + 28.0 + 20.0 * lf;
}

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) noexcept
{
    std::uint64_t z = a ^ (0x9E3779B97F4A7C15ULL * (b + 1));
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

CMatrix sample_fading(int rows, int cols, double pl_db, std::mt19937_64& rng)
{
    require_shape(rows >= 1 && cols >= 1, "sample_fading: dimensions must be >= 1");
    const double variance = std::pow(10.0, -pl_db / 10.0);
    std::normal_distribution<double> gauss(0.0, std::sqrt(variance / 2.0));
    CMatrix h(rows, cols);
    for (Eigen::Index j = 0; j < h.cols(); ++j) {
        for (Eigen::Index i = 0; i < h.rows(); ++i) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            h(i, j) = Complex(re, im);
        }
    }
    return h;
}

namespace {

enum Substream : std::uint64_t { kDirect = 1, kFirstHop = 2, kSecondHop = 3, kSelfLoop = 4 };

CMatrix draw(std::uint64_t drop_seed, Substream s, int rows, int cols, double pl_db)
{
    std::mt19937_64 rng(mix_seed(drop_seed, s));
    return sample_fading(rows, cols, pl_db, rng);
}

} // namespace

ChannelSet generate_drop(const SystemConfig& cfg, std::uint64_t drop_seed, AssistingNode node)
{
    const HopDistances hops = hop_distances(cfg.geometry);
    PathLossParams los{cfg.carrier_ghz, LinkCondition::Los};
    PathLossParams nlos{cfg.carrier_ghz, LinkCondition::Nlos};

    const double pl_direct = pathloss_db(hops.d_sd, nlos);
    const double pl_first = pathloss_db(hops.d_sr, los);
    const double pl_second = pathloss_db(hops.d_rd, los);

    const int m = cfg.tx_antennas;
    const int n = cfg.rx_antennas;
    const int k = node == AssistingNode::Surface ? cfg.ris_elements : cfg.relay_antennas;

    ChannelSet ch;
    ch.drop_seed = drop_seed;
    ch.direct = draw(drop_seed, kDirect, n, m, pl_direct);
    ch.first_hop = draw(drop_seed, kFirstHop, k, m, pl_first);
    ch.second_hop = draw(drop_seed, kSecondHop, n, k, pl_second);
    if (node == AssistingNode::Relay) {
        ch.self_interference = draw(drop_seed, kSelfLoop, k, k, kSelfInterferenceDb);
    }
    return ch;
}

} // namespace risrelay
