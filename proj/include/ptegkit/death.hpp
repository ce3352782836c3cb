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
#include <cstdint>
#include <optional>

#include "ptegkit/periodic.hpp"
#include "ptegkit/pteg.hpp"
#include "ptegkit/tropical.hpp"

namespace ptegkit {

struct DeathReport {
  /// Smallest horizon K whose block system has no solution; empty when no
  /// such K exists up to horizon_bound.
  std::optional<std::uint64_t> k_star;
  std::uint64_t horizon_bound = 0;
  /// Positive circuit of G(M_{k*}) over block node ids z*n + r.
  std::optional<PathWitness> witness;
  /// Number of block systems checked.
  std::size_t probes = 0;

  /// Events per transition that can be scheduled without a violation: the
  /// feasible horizons are 0..k*-1, i.e. k* dater vectors.
  [[nodiscard]] std::optional<std::uint64_t> max_firings() const { return k_star; }
};

/// Outcome of checking one horizon.
struct HorizonCheck {
  bool feasible = true;
  /// When infeasible: every horizon >= this one is infeasible as well.
  std::uint64_t infeasible_from = 0;
  std::optional<PathWitness> witness;
};

HorizonCheck check_horizon(const PeriodicSystem& sys, std::uint64_t k);

/// Binary search over [0, K̂] with K̂ taken from the weak-consistency
/// certificate. Throws IsWeaklyConsistent when the net is weakly consistent.
DeathReport first_death(const CharacteristicMatrices& mats);

/// Binary search over [0, bound] without consulting the verifier.
DeathReport first_death(const CharacteristicMatrices& mats, std::uint64_t bound);

}  // namespace ptegkit
