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
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "risrelay/subsolvers.hpp"

namespace risrelay {

struct CheckResult {
    std::string name;
    bool passed = false;
    double residual = 0.0;   // worst measured residual
    double tolerance = 0.0;  // pass iff residual <= tolerance
    int cases = 0;
};

struct ValidationReport {
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;

    bool all_passed() const;
    // One line per check plus a summary line. Contains no timings, so equal
    // seeds give byte-identical text.
    std::string format() const;
};

using PhiBuilder = std::function<QuadraticForm(const CMatrix& h_d, const CMatrix& h_1,
                                               const CMatrix& h_2, const CMatrix& u,
                                               const CMatrix& w, const CMatrix& v)>;

// Quadratic-vs-trace equivalence of a Φ builder: for each random instance the
// gap between the form and tr(W E) must not depend on φ.
CheckResult check_phi_builder_contract(const PhiBuilder& builder, std::mt19937_64& rng,
                                       int instances = 100);

struct ValidationHooks {
    PhiBuilder phi_builder = build_phi_quadratic;
};

// Runs the whole oracle suite with RNG seeded from `seed`.
ValidationReport validate(std::uint64_t seed = 7, const ValidationHooks& hooks = {});

} // namespace risrelay
