// Copyright 2026 The ptegkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <span>

#include "ptegkit/pteg.hpp"

namespace ptegkit {

/// x = M_k* ⊗ u sliced into daters x(0..k). An empty `u` means the zero
/// vector; otherwise u has n(k+1) entries ordered like the daters.
/// Throws HorizonInfeasible when horizon k admits no trajectory.
TrajectoryWindow synthesize(const CharacteristicMatrices& mats, std::size_t k, std::span<const Rational> u = {});

}  // namespace ptegkit
