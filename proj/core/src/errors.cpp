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

#include "risrelay/errors.hpp"

namespace risrelay {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::DistanceOutOfRange: return "DistanceOutOfRange";
    case ErrorCode::SingularNoise: return "SingularNoise";
    case ErrorCode::SingularMse: return "SingularMse";
    case ErrorCode::SingularRecovery: return "SingularRecovery";
    case ErrorCode::InfeasibleSubproblem: return "InfeasibleSubproblem";
    case ErrorCode::DegenerateForm: return "DegenerateForm";
    case ErrorCode::NonMonotone: return "NonMonotone";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
{
}

void raise(ErrorCode code, const std::string& what)
{
    throw Error(code, what);
}

} // namespace risrelay
