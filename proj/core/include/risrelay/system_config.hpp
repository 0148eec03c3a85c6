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

namespace risrelay {

double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);

// Thermal noise power over `bandwidth_hz`: -174 dBm/Hz plus a noise figure.
double thermal_noise_watts(double bandwidth_hz, double noise_figure_db = 10.0);

// Source at (0, 0), destination at (d_sd, 0), assisting node at (d_1, d_r).
struct Geometry {
    double d_sd = 100.0;
    double d_1 = 50.0;
    double d_r = 10.0;
};

// Link parameters shared by every architecture. Defaults reproduce the
// reference deployment: 4x4 MIMO, 200 reflecting elements, 4-antenna relay,
// 43 dBm at source and relay, 3 GHz carrier, 100 MHz bandwidth.
struct SystemConfig {
    int tx_antennas = 4;      // M
    int rx_antennas = 4;      // N
    int ris_elements = 200;   // K
    int relay_antennas = 4;   // L
    int streams = 4;          // l

    double source_power_w = dbm_to_watts(43.0);   // P_s
    double relay_power_w = dbm_to_watts(43.0);    // P_r
    double noise_dest_w = thermal_noise_watts(100e6);   // sigma2_D
    double noise_relay_w = thermal_noise_watts(100e6);  // sigma2_R

    Geometry geometry{};
    double carrier_ghz = 3.0;
    double bandwidth_hz = 100e6;

    // Throws InvalidConfig on the first violated invariant.
    void validate() const;
};

} // namespace risrelay
