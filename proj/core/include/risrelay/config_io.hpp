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

#include <string>
#include <string_view>

#include "risrelay/experiment.hpp"

namespace risrelay {

// Flat JSON object. Keys (all optional, defaults from ExperimentSpec):
//   M N K L l P_s P_r sigma2_D sigma2_R d_sd d_1 d_r carrier_ghz bandwidth_hz
//   max_outer_iters eps_rel init_mode phi_max_cycles phi_rel_tol
//   schemes sweep_param sweep_values drops master_seed restarts threads
// Powers and noise variances are in Watts. Unknown keys, wrong types and
// invalid values raise InvalidConfig.
ExperimentSpec parse_experiment_json(std::string_view text);
ExperimentSpec load_experiment_file(const std::string& path);

// Every key written explicitly; parse_experiment_json reproduces the spec.
std::string experiment_to_json(const ExperimentSpec& spec);

} // namespace risrelay
