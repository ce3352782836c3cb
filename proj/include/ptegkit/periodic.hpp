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
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ptegkit/pteg.hpp"
#include "ptegkit/tropical.hpp"

namespace ptegkit {

/// Periodic graph G(P, I, C): nodes (row, column) with column in Z. For each
/// finite entry X(r', r) there is an arc (r, c) -> (r', c + d) where d = -1
/// for P, +1 for I and 0 for C.
struct PeriodicSystem {
  TropicalMatrix p;
  TropicalMatrix i;
  TropicalMatrix c;
  [[nodiscard]] std::size_t n() const noexcept { return p.rows(); }
};

/// P = B1♯, I = A1 ⊕ E⊗, C = A0 ⊕ B0♯.
PeriodicSystem build_periodic(const CharacteristicMatrices& mats);

/// Horizon-k block matrix: n(k+1) nodes, node z*n + r is (r, z).
struct BlockSystem {
  std::size_t k = 0;
  TropicalMatrix m;
};

/// Block (z, z) = C, (z, z+1) = P, (z+1, z) = I.
BlockSystem build_block(const PeriodicSystem& sys, std::size_t k);

struct PeriodicNode {
  std::size_t row = 0;
  std::int64_t col = 0;
  friend bool operator==(const PeriodicNode&, const PeriodicNode&) = default;
};

/// Weight of the arc a -> b in G(P, I, C), if it exists.
std::optional<Rational> periodic_arc(const PeriodicSystem& sys, const PeriodicNode& a, const PeriodicNode& b);
/// Exact weight of a walk; throws InvalidArgument if a step is not an arc.
Rational periodic_walk_weight(const PeriodicSystem& sys, const std::vector<PeriodicNode>& walk);

struct PumpPair {
  std::int64_t t = 0;
  Rational w;
  friend bool operator==(const PumpPair&, const PumpPair&) = default;
};
/// Sorted by t; at most one pair per t.
using PumpSet = std::vector<PumpPair>;

/// Pump sets, connection matrix and realizing walks, computed by one route.
class PumpAnalysis {
 public:
  virtual ~PumpAnalysis() = default;

  [[nodiscard]] virtual const std::string& route() const = 0;
  [[nodiscard]] virtual const std::vector<PumpSet>& pump_sets() const = 0;
  /// Symmetric n x n max-plus matrix. The diagonal is at least 0: the
  /// length-0 circuit at (i, 0) passes through row i.
  [[nodiscard]] virtual const TropicalMatrix& connection() const = 0;
  /// Walk (i, 0) -> (i, t) realizing the pump pair with shift t.
  [[nodiscard]] virtual std::vector<PeriodicNode> pump_walk(std::size_t i, std::int64_t t) const = 0;
  /// Closed walk realizing connection()(i, j); it visits rows i and j and
  /// starts and ends at the same node. For i == j it may be the single node
  /// (i, 0).
  [[nodiscard]] virtual std::vector<PeriodicNode> connection_circuit(std::size_t i, std::size_t j) const = 0;
};

/// Exact definition: S_i over walks of length <= n, R over closed walks of
/// length <= n^2 through both rows.
std::unique_ptr<PumpAnalysis> definitional_analysis(const PeriodicSystem& sys);

/// Extraction from finite star matrices: S_i from M*_{2n} centred on column
/// n (shifts in [-n, n], any length), R_ij from M*_{W}, W = 2*floor(n^2/2),
/// over closed walks through (j, 0) visiting row i (and symmetrically).
/// Returns nullptr when either block matrix is outside Γ.
std::unique_ptr<PumpAnalysis> window_analysis(const PeriodicSystem& sys);

/// Convenience wrappers over definitional_analysis.
std::vector<PumpSet> pump_sets(const PeriodicSystem& sys);
TropicalMatrix connection_matrix(const PeriodicSystem& sys);

}  // namespace ptegkit
