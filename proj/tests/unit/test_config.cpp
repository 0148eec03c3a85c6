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

#include <cstdio>
#include <fstream>

#include "risrelay/config_io.hpp"

using namespace risrelay;

namespace {

ErrorCode code_of(std::string_view text)
{
    try {
        (void)parse_experiment_json(text);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::ShapeMismatch;
}

} // namespace

TEST_CASE("empty object gives defaults")
{
    const ExperimentSpec s = parse_experiment_json("{}");
    const ExperimentSpec d;
    CHECK(s.base_config.ris_elements == d.base_config.ris_elements);
    CHECK(s.drops == d.drops);
    CHECK(s.schemes == d.schemes);
    CHECK(s.sweep_param == SweepParam::None);
}

TEST_CASE("all keys are read")
{
    const ExperimentSpec s = parse_experiment_json(R"({
        "M": 2, "N": 3, "K": 40, "L": 3, "l": 2,
        "P_s": 1.5, "P_r": 2.5, "sigma2_D": 1e-11, "sigma2_R": 2e-11,
        "d_sd": 120, "d_1": 30, "d_r": 15, "carrier_ghz": 3.5, "bandwidth_hz": 2e7,
        "max_outer_iters": 50, "eps_rel": 1e-5, "init_mode": "random_phase",
        "phi_max_cycles": 100, "phi_rel_tol": 1e-9,
        "schemes": ["ris", "DIRECT"], "sweep_param": "d_1", "sweep_values": [20, 40],
        "drops": 4, "master_seed": 18446744073709551615, "restarts": 2, "threads": 2
    })");
    const SystemConfig& c = s.base_config;
    CHECK(c.tx_antennas == 2);
    CHECK(c.rx_antennas == 3);
    CHECK(c.ris_elements == 40);
    CHECK(c.relay_antennas == 3);
    CHECK(c.streams == 2);
    CHECK(c.source_power_w == 1.5);
    CHECK(c.relay_power_w == 2.5);
    CHECK(c.noise_dest_w == 1e-11);
    CHECK(c.noise_relay_w == 2e-11);
    CHECK(c.geometry.d_sd == 120);
    CHECK(c.geometry.d_1 == 30);
    CHECK(c.geometry.d_r == 15);
    CHECK(c.carrier_ghz == 3.5);
    CHECK(c.bandwidth_hz == 2e7);
    CHECK(s.solver.max_outer_iters == 50);
    CHECK(s.solver.eps_rel == 1e-5);
    CHECK(s.solver.init_mode == InitMode::RandomPhase);
    CHECK(s.solver.phi.max_cycles == 100);
    CHECK(s.solver.phi.rel_tol == 1e-9);
    CHECK(s.schemes == std::vector<Scheme>{Scheme::Ris, Scheme::Direct});
    CHECK(s.sweep_param == SweepParam::D1);
    CHECK(s.sweep_values == std::vector<double>{20, 40});
    CHECK(s.drops == 4);
    CHECK(s.master_seed == 18446744073709551615ULL);
    CHECK(s.restarts == 2);
    CHECK(s.threads == 2);
}

TEST_CASE("unknown keys are rejected")
{
    CHECK(code_of(R"({"K": 10, "noise": 1})") == ErrorCode::InvalidConfig);
    CHECK(code_of(R"({"k": 10})") == ErrorCode::InvalidConfig);
}

TEST_CASE("type and value errors")
{
    CHECK(code_of("not json") == ErrorCode::InvalidConfig);
    CHECK(code_of("[1, 2]") == ErrorCode::InvalidConfig);
    CHECK(code_of(R"({"K": 2.5})") == ErrorCode::InvalidConfig);
    CHECK(code_of(R"({"K": "ten"})") == ErrorCode::InvalidConfig);
    CHECK(code_of(R"({"P_s": "high"})") == ErrorCode::InvalidConfig);
    CHECK(code_of(R"({"P_s": -1})") == ErrorCode::InvalidConfig);
    CHECK(code_of(R"({"l": 5})") == ErrorCode::InvalidConfig);
    CHECK(code_of(R"({"drops": 0})") == ErrorCode::InvalidConfig);
    CHECK(code_of(R"({"schemes": "RIS"})") == ErrorCode::InvalidConfig);
    CHECK(code_of(R"({"schemes": ["AF"]})") == ErrorCode::InvalidConfig);
    CHECK(code_of(R"({"sweep_param": "K"})") == ErrorCode::InvalidConfig);
    CHECK(code_of(R"({"sweep_param": "K", "sweep_values": [10.5]})") == ErrorCode::InvalidConfig);
    CHECK(code_of(R"({"master_seed": -3})") == ErrorCode::InvalidConfig);
    CHECK(code_of(R"({"init_mode": "warm"})") == ErrorCode::InvalidConfig);
    CHECK(code_of(R"({"eps_rel": 0})") == ErrorCode::InvalidConfig);
}

TEST_CASE("serialization round trip")
{
    ExperimentSpec s;
    s.base_config.ris_elements = 33;
    s.base_config.source_power_w = 0.123456789012345;
    s.schemes = {Scheme::Fdr, Scheme::Hdr};
    s.sweep_param = SweepParam::Ps;
    s.sweep_values = {1.0, 2.0};
    s.master_seed = 99;
    const std::string text = experiment_to_json(s);
    const ExperimentSpec back = parse_experiment_json(text);
    CHECK(back.base_config.ris_elements == 33);
    CHECK(back.base_config.source_power_w == s.base_config.source_power_w);
    CHECK(back.schemes == s.schemes);
    CHECK(back.sweep_param == SweepParam::Ps);
    CHECK(back.sweep_values == s.sweep_values);
    CHECK(back.master_seed == 99);
    CHECK(experiment_to_json(back) == text);
}

TEST_CASE("config files")
{
    const std::string path = "test_config_tmp.json";
    std::ofstream(path) << R"({"K": 12, "drops": 2})";
    const ExperimentSpec s = load_experiment_file(path);
    CHECK(s.base_config.ris_elements == 12);
    CHECK(s.drops == 2);
    std::remove(path.c_str());
    CHECK_THROWS_AS((void)load_experiment_file("does/not/exist.json"), Error);
}
