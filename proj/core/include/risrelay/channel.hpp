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

#include <cstdint>
#include <optional>
#include <random>

#include "risrelay/linalg.hpp"
#include "risrelay/system_config.hpp"

namespace risrelay {

enum class LinkCondition { Los, Nlos };

struct PathLossParams {
    double carrier_ghz = 3.0;
    LinkCondition condition = LinkCondition::Los;
    double bs_height_m = 10.0;
    double ut_height_m = 1.5;
};

struct HopDistances {
    double d_sr;  // source to assisting node
    double d_rd;  // assisting node to destination
    double d_sd;  // source to destination
};

HopDistances hop_distances(const Geometry& g);

// Smallest distance for which the UMi formulas are defined.
inline constexpr double kMinPathLossDistance = 10.0;
// Self-interference loop attenuation used when drawing H_s.
inline constexpr double kSelfInterferenceDb = 100.0;

// LOS breakpoint 4·h'_BS·h'_UT·f/c with effective heights h - 1 m.
double breakpoint_distance(const PathLossParams& p);

// 3GPP UMi path loss in dB (distance in meters):
//   LOS  (10 m <= d < d_BP): 22.0·log10(d) + 28.0 + 20·log10(f_GHz)
//   NLOS (d >= 10 m):        36.7·log10(d) + 22.7 + 26·log10(f_GHz)
// Throws DistanceOutOfRange below 10 m and for LOS at or beyond the breakpoint.
double pathloss_db(double d, const PathLossParams& p);

// splitmix64 finalizer applied to a ^ golden·(b + 1). Used to derive
// independent substream seeds.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) noexcept;

// i.i.d. CN(0, 10^(-pl_db/10)) entries, filled in column-major order.
CMatrix sample_fading(int rows, int cols, double pl_db, std::mt19937_64& rng);

enum class AssistingNode { Surface, Relay };

// One fading drop. For a surface, first_hop is K×M and second_hop N×K;
// for a relay they are L×M and N×L and self_interference (L×L) is present.
struct ChannelSet {
    CMatrix direct;       // H_d, N×M
    CMatrix first_hop;    // H_1
    CMatrix second_hop;   // H_2
    std::optional<CMatrix> self_interference;  // H_s
    std::uint64_t drop_seed = 0;
};

// Direct link is NLOS over d_sd; both hops via the assisting node are LOS.
// Each matrix comes from its own substream of drop_seed, so H_d is identical
// for surface and relay drops drawn with the same seed.
ChannelSet generate_drop(const SystemConfig& cfg, std::uint64_t drop_seed,
                         AssistingNode node = AssistingNode::Surface);

} // namespace risrelay
