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

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "risrelay/config_io.hpp"
#include "risrelay/errors.hpp"
#include "risrelay/experiment.hpp"
#include "risrelay/models.hpp"
#include "risrelay/validation.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitConfig = 2;

std::vector<double> parse_values(const std::string& list)
{
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= list.size()) {
        const std::size_t comma = std::min(list.find(',', start), list.size());
        const std::string item = list.substr(start, comma - start);
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (item.empty() || used != item.size()) {
            risrelay::raise(risrelay::ErrorCode::InvalidConfig, "bad sweep value '" + item + "'");
        }
        out.push_back(v);
        start = comma + 1;
    }
    return out;
}

std::vector<risrelay::Scheme> parse_schemes(const std::string& list)
{
    std::vector<risrelay::Scheme> out;
    std::size_t start = 0;
    while (start <= list.size()) {
        const std::size_t comma = std::min(list.find(',', start), list.size());
        out.push_back(risrelay::parse_scheme(list.substr(start, comma - start)));
        start = comma + 1;
    }
    return out;
}

int emit(const std::vector<risrelay::ResultRow>& rows, const std::string& path)
{
    if (path == "-") {
        risrelay::write_csv(std::cout, rows);
        return kExitOk;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) {
        std::cerr << "error: cannot open '" << path << "' for writing\n";
        return kExitConfig;
    }
    risrelay::write_csv(os, rows);
    return os ? kExitOk : kExitConfig;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"risrelay - RIS and relay MIMO link optimization"};
    app.require_subcommand(1);

    std::string config_path, out_path;
    auto* run = app.add_subcommand("run", "Run the experiment described by a JSON config");
    run->add_option("--config", config_path, "JSON config file")->required();
    run->add_option("--out", out_path, "Output CSV ('-' for stdout)")->required();

    std::string param, values, schemes = "RIS,FDR,HDR,DIRECT", base_path;
    int drops = 20;
    std::uint64_t seed = 1;
    int threads = 1;
    int restarts = 1;
    auto* sweep = app.add_subcommand("sweep", "Sweep one parameter over a list of values");
    sweep->add_option("--param", param, "k, d1, dr or ps")->required();
    sweep->add_option("--values", values, "Comma-separated values")->required();
    sweep->add_option("--drops", drops, "Channel drops per value");
    sweep->add_option("--seed", seed, "Master seed");
    sweep->add_option("--schemes", schemes, "Comma-separated schemes");
    sweep->add_option("--config", base_path, "Optional base JSON config");
    sweep->add_option("--threads", threads, "Worker threads");
    sweep->add_option("--restarts", restarts, "Random restarts per cell");
    sweep->add_option("--out", out_path, "Output CSV ('-' for stdout)")->required();

    std::uint64_t validate_seed = 7;
    std::string report_path;
    auto* validate = app.add_subcommand("validate", "Run the numerical self-checks");
    validate->add_option("--seed", validate_seed, "Random seed");
    validate->add_option("--out", report_path, "Write the report to a file as well");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (*run) {
            const risrelay::ExperimentSpec spec = risrelay::load_experiment_file(config_path);
            return emit(risrelay::run_experiment(spec), out_path);
        }
        if (*sweep) {
            risrelay::ExperimentSpec spec;
            if (!base_path.empty()) {
                spec = risrelay::load_experiment_file(base_path);
            }
            spec.sweep_param = risrelay::parse_sweep_param(param);
            spec.sweep_values = parse_values(values);
            spec.schemes = parse_schemes(schemes);
            spec.drops = drops;
            spec.master_seed = seed;
            spec.threads = threads;
            spec.restarts = restarts;
            spec.validate();
            return emit(risrelay::run_experiment(spec), out_path);
        }
        const risrelay::ValidationReport report = risrelay::validate(validate_seed);
        const std::string text = report.format();
        std::cout << text;
        if (!report_path.empty()) {
            std::ofstream(report_path, std::ios::binary) << text;
        }
        return report.all_passed() ? kExitOk : kExitValidation;
    } catch (const risrelay::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.code() == risrelay::ErrorCode::InvalidConfig ? kExitConfig : kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    }
}
