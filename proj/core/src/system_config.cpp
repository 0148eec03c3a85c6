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

#include "risrelay/system_config.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "risrelay/errors.hpp"

namespace risrelay {

double dbm_to_watts(double dbm)
{
    return std::pow(10.0, (dbm - 30.0) / 10.0);
}

double watts_to_dbm(double watts)
{
    return 10.0 * std::log10(watts) + 30.0;
}

double thermal_noise_watts(double bandwidth_hz, double noise_figure_db)
{
    return dbm_to_watts(-174.0 + 10.0 * std::log10(bandwidth_hz) + noise_figure_db);
}

namespace {

void check(bool ok, const std::string& what)
{
    if (!ok) {
        raise(ErrorCode::InvalidConfig, what);
    }
}

bool positive(double x)
{
    return std::isfinite(x) && x > 0.0;
}

} // namespace

void SystemConfig::validate() const
{
    check(tx_antennas >= 1 && rx_antennas >= 1, "antenna counts must be >= 1");
    check(ris_elements >= 1, "K must be >= 1");
    check(relay_antennas >= 1, "L must be >= 1");
    check(streams >= 1 && streams <= std::min(tx_antennas, rx_antennas),
          "streams must satisfy 1 <= l <= min(M, N)");
    check(positive(source_power_w) && positive(relay_power_w), "powers must be > 0");
    check(positive(noise_dest_w) && positive(noise_relay_w), "noise variances must be > 0");
    check(positive(geometry.d_sd), "d_sd must be > 0");
    check(std::isfinite(geometry.d_1) && std::isfinite(geometry.d_r), "geometry must be finite");
    check(positive(carrier_ghz), "carrier_ghz must be > 0");
    check(positive(bandwidth_hz), "bandwidth_hz must be > 0");
}

} // namespace risrelay
