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

#include "risrelay/linalg.hpp"

namespace risrelay {

// max log2 det(I + H Q Hᴴ / σ²) over Q ⪰ 0, tr Q <= P: water-filling over
// the squared singular values of H with the water level found by bisection.
double waterfilling_capacity(const CMatrix& h, double sigma2, double p);

} // namespace risrelay
