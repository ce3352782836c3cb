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
#include <string_view>
#include <vector>

#include "ptegkit/rational.hpp"
#include "ptegkit/tropical.hpp"

namespace ptegkit {

/// Place with one upstream and one downstream transition and sojourn window
/// [lower, upper]. `upper` is finite or +inf.
struct Place {
  std::size_t source = 0;
  std::size_t target = 0;
  int marking = 0;
  Rational lower;
  TropicalScalar upper = TropicalScalar::pos_inf();

  friend bool operator==(const Place&, const Place&) = default;
};

/// P-time event graph. Construct through make_pteg or parse_pteg so the
/// invariants hold.
class PTEG {
 public:
  [[nodiscard]] std::size_t n() const noexcept { return transitions_.size(); }
  [[nodiscard]] const std::vector<std::string>& transitions() const noexcept { return transitions_; }
  [[nodiscard]] const std::vector<Place>& places() const noexcept { return places_; }

 private:
  friend PTEG make_pteg(std::vector<std::string> transitions, std::vector<Place> places);
  std::vector<std::string> transitions_;
  std::vector<Place> places_;
};

/// Validates and builds a net. Errors: EmptyNet, MarkingNotBinary,
/// IntervalInverted, SchemaError (bad index, negative or infinite bound).
PTEG make_pteg(std::vector<std::string> transitions, std::vector<Place> places);

/// Parses the JSON net document. Numbers are read exactly: decimal literals
/// are converted digit by digit and "p/q" strings are accepted.
PTEG parse_pteg(std::string_view json);

struct CharacteristicMatrices {
  TropicalMatrix a0, a1;  // max-plus
  TropicalMatrix b0, b1;  // min-plus
  [[nodiscard]] std::size_t n() const noexcept { return a0.rows(); }
};

/// A^μ(i,j) = max lower bound, B^μ(i,j) = min upper bound over the places
/// t_j -> t_i with marking μ.
CharacteristicMatrices compile_matrices(const PTEG& net);

/// Daters x(0), ..., x(K); each an n-vector of exact time stamps.
struct TrajectoryWindow {
  std::vector<std::vector<Rational>> daters;
  [[nodiscard]] std::size_t horizon() const noexcept { return daters.empty() ? 0 : daters.size() - 1; }
};

TrajectoryWindow parse_trajectory(std::string_view json);

enum class ViolationKind : std::uint8_t { A0, B0, A1, B1, NonDecreasing };
const char* to_string(ViolationKind kind) noexcept;

/// First failed inequality. For A1, B1 and NonDecreasing, `k` indexes the
/// earlier event of the pair (k, k+1). `row` is the transition on the
/// left-hand side; `col` the one on the right (equal to `row` for
/// NonDecreasing).
struct Violation {
  std::size_t k = 0;
  ViolationKind kind = ViolationKind::A0;
  std::size_t row = 0;
  std::size_t col = 0;
  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Scans k ascending, then kind in enum order, then row, then column, and
/// returns the first violation; nullopt means the window is consistent.
std::optional<Violation> validate_trajectory(const CharacteristicMatrices& mats, const TrajectoryWindow& traj);

}  // namespace ptegkit
