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

#include <stdexcept>
#include <string>
#include <string_view>

namespace risrelay {

enum class ErrorCode {
    ShapeMismatch,
    DistanceOutOfRange,
    SingularNoise,
    SingularMse,
    SingularRecovery,
    InfeasibleSubproblem,
    DegenerateForm,
    NonMonotone,
    InvalidConfig,
};

std::string_view to_string(ErrorCode code) noexcept;

// Single exception type for the library; callers dispatch on code().
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& what);

} // namespace risrelay
