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
#include <string>
#include <vector>

#include "ptegkit/periodic.hpp"
#include "ptegkit/pteg.hpp"

namespace ptegkit {

/// y*t + y2*t2 = 0 and y*w + y2*w2 + offset > 0 over non-negative integers.
struct DiophantineProblem {
  std::int64_t t = 0;
  Rational w;
  std::int64_t t2 = 0;
  Rational w2;
  Rational offset;
};

struct DiophantineSolution {
  std::int64_t y = 0;
  std::int64_t y2 = 0;
  friend bool operator==(const DiophantineSolution&, const DiophantineSolution&) = default;
};

/// Minimal solution other than (0, 0) with the offset taken as 0.
std::optional<DiophantineSolution> solve_homogeneous(const DiophantineProblem& p);
/// Minimal solution honouring the offset; (0, 0) when the offset is positive.
/// When both shifts are zero and the offset is not positive, the answer uses
/// only the axis with the larger weight (the first on ties).
std::optional<DiophantineSolution> solve_offset(const DiophantineProblem& p);

/// Evidence that a net is not weakly consistent: pumping (t, w) at row i
/// y times and (t2, w2) at row j y2 times inside an R-circuit through both
/// rows yields a positive circuit in G(P, I, C).
struct WCCertificate {
  std::string route;  // "window" or "definitional"
  std::size_t i = 0;
  std::size_t j = 0;
  PumpPair pump_i;
  PumpPair pump_j;
  Rational r;
  DiophantineSolution ray;      // minimal homogeneous solution
  DiophantineSolution minimal;  // minimal solution with offset r
  std::uint64_t horizon_bound = 0;       // y|t| + 2n + 2*floor(n^2/2) + 1
  std::uint64_t conservative_bound = 0;  // y|t| + 2n + n^2 + 1
  /// Materialized circuit, columns shifted so the leftmost is 0.
  std::vector<PeriodicNode> circuit;
  Rational circuit_weight;
  std::uint64_t circuit_span = 0;  // the circuit lies in G(M_span)

  /// Upper end of the interval the first-death search scans.
  [[nodiscard]] std::uint64_t search_bound() const;
};

struct WCVerdict {
  bool weakly_consistent = true;
  std::optional<WCCertificate> certificate;
};

/// Scans (i, j) ascending, then S_i and S_j pairs in shift order, for a pair
/// solving the homogeneous system with R_ij finite. The star-window route
/// is tried first; the definitional route decides when the window finds
/// nothing.
WCVerdict verify_wc(const CharacteristicMatrices& mats);
WCVerdict verify_wc(const PeriodicSystem& sys);

/// First hit of the scan over one analysis, or nullopt.
std::optional<WCCertificate> find_certificate(const PeriodicSystem& sys, const PumpAnalysis& analysis);

}  // namespace ptegkit
