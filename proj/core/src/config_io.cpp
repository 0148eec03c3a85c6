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

#include "risrelay/config_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace risrelay {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what)
{
    raise(ErrorCode::InvalidConfig, what);
}

int as_int(const json& v, const char* key)
{
    if (!v.is_number_integer()) {
        bad(std::string("'") + key + "' must be an integer");
    }
    return v.get<int>();
}

double as_real(const json& v, const char* key)
{
    if (!v.is_number()) {
        bad(std::string("'") + key + "' must be a number");
    }
    return v.get<double>();
}

std::string as_string(const json& v, const char* key)
{
    if (!v.is_string()) {
        bad(std::string("'") + key + "' must be a string");
    }
    return v.get<std::string>();
}

InitMode parse_init_mode(const std::string& s)
{
    if (s == "deterministic") return InitMode::Deterministic;
    if (s == "random_phase") return InitMode::RandomPhase;
    bad("init_mode must be 'deterministic' or 'random_phase'");
}

std::string_view init_mode_name(InitMode m)
{
    return m == InitMode::Deterministic ? "deterministic" : "random_phase";
}

} // namespace

ExperimentSpec parse_experiment_json(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        bad(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        bad("config must be a JSON object");
    }

    ExperimentSpec spec;
    SystemConfig& c = spec.base_config;
    SolverOptions& o = spec.solver;
    for (const auto& [key, v] : doc.items()) {
        const char* k = key.c_str();
        if (key == "M") c.tx_antennas = as_int(v, k);
        else if (key == "N") c.rx_antennas = as_int(v, k);
        else if (key == "K") c.ris_elements = as_int(v, k);
        else if (key == "L") c.relay_antennas = as_int(v, k);
        else if (key == "l") c.streams = as_int(v, k);
        else if (key == "P_s") c.source_power_w = as_real(v, k);
        else if (key == "P_r") c.relay_power_w = as_real(v, k);
        else if (key == "sigma2_D") c.noise_dest_w = as_real(v, k);
        else if (key == "sigma2_R") c.noise_relay_w = as_real(v, k);
        else if (key == "d_sd") c.geometry.d_sd = as_real(v, k);
        else if (key == "d_1") c.geometry.d_1 = as_real(v, k);
        else if (key == "d_r") c.geometry.d_r = as_real(v, k);
        else if (key == "carrier_ghz") c.carrier_ghz = as_real(v, k);
        else if (key == "bandwidth_hz") c.bandwidth_hz = as_real(v, k);
        else if (key == "max_outer_iters") o.max_outer_iters = as_int(v, k);
        else if (key == "eps_rel") o.eps_rel = as_real(v, k);
        else if (key == "init_mode") o.init_mode = parse_init_mode(as_string(v, k));
        else if (key == "phi_max_cycles") o.phi.max_cycles = as_int(v, k);
        else if (key == "phi_rel_tol") o.phi.rel_tol = as_real(v, k);
        else if (key == "schemes") {
            if (!v.is_array()) bad("'schemes' must be an array of names");
            spec.schemes.clear();
            for (const json& s : v) spec.schemes.push_back(parse_scheme(as_string(s, k)));
        }
        else if (key == "sweep_param") spec.sweep_param = parse_sweep_param(as_string(v, k));
        else if (key == "sweep_values") {
            if (!v.is_array()) bad("'sweep_values' must be an array of numbers");
            spec.sweep_values.clear();
            for (const json& x : v) spec.sweep_values.push_back(as_real(x, k));
        }
        else if (key == "drops") spec.drops = as_int(v, k);
        else if (key == "master_seed") {
            if (!v.is_number_unsigned()) bad("'master_seed' must be a non-negative integer");
            spec.master_seed = v.get<std::uint64_t>();
        }
        else if (key == "restarts") spec.restarts = as_int(v, k);
        else if (key == "threads") spec.threads = as_int(v, k);
        else bad("unknown key '" + key + "'");
    }
    spec.validate();
    return spec;
}

ExperimentSpec load_experiment_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        bad("cannot open config file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_experiment_json(buf.str());
}

std::string experiment_to_json(const ExperimentSpec& spec)
{
    const SystemConfig& c = spec.base_config;
    const SolverOptions& o = spec.solver;
    json doc = {
        {"M", c.tx_antennas},
        {"N", c.rx_antennas},
        {"K", c.ris_elements},
        {"L", c.relay_antennas},
        {"l", c.streams},
        {"P_s", c.source_power_w},
        {"P_r", c.relay_power_w},
        {"sigma2_D", c.noise_dest_w},
        {"sigma2_R", c.noise_relay_w},
        {"d_sd", c.geometry.d_sd},
        {"d_1", c.geometry.d_1},
        {"d_r", c.geometry.d_r},
        {"carrier_ghz", c.carrier_ghz},
        {"bandwidth_hz", c.bandwidth_hz},
        {"max_outer_iters", o.max_outer_iters},
        {"eps_rel", o.eps_rel},
        {"init_mode", init_mode_name(o.init_mode)},
        {"phi_max_cycles", o.phi.max_cycles},
        {"phi_rel_tol", o.phi.rel_tol},
        {"sweep_param", to_string(spec.sweep_param)},
        {"sweep_values", spec.sweep_values},
        {"drops", spec.drops},
        {"master_seed", spec.master_seed},
        {"restarts", spec.restarts},
        {"threads", spec.threads},
    };
    json schemes = json::array();
    for (Scheme s : spec.schemes) {
        schemes.push_back(to_string(s));
    }
    doc["schemes"] = schemes;
    return doc.dump(2) + "\n";
}

} // namespace risrelay
