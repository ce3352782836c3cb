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

#include "ptegkit/pteg.hpp"

#include <string>

namespace ptegkit {

PTEG make_pteg(std::vector<std::string> transitions, std::vector<Place> places) {
  if (transitions.empty()) throw Error(ErrorCode::EmptyNet, "net has no transitions");
  const std::size_t n = transitions.size();
  for (std::size_t idx = 0; idx < places.size(); ++idx) {
    const Place& p = places[idx];
    const std::string where = "place " + std::to_string(idx) + ": ";
    if (p.source >= n || p.target >= n) throw Error(ErrorCode::SchemaError, where + "transition index out of range");
    if (p.marking != 0 && p.marking != 1)
      throw Error(ErrorCode::MarkingNotBinary,
                  where + "marking " + std::to_string(p.marking) +
                      " is not 0 or 1; split the place into a chain of 1-marked places first");
    if (p.lower.sign() < 0) throw Error(ErrorCode::SchemaError, where + "lower bound is negative");
    if (p.upper.is_neg_inf()) throw Error(ErrorCode::SchemaError, where + "upper bound is -inf");
    if (p.upper.is_finite() && p.upper.value() < p.lower)
      throw Error(ErrorCode::IntervalInverted,
                  where + "lower bound " + p.lower.to_string() + " exceeds upper bound " + p.upper.to_string());
  }
  PTEG net;
  net.transitions_ = std::move(transitions);
  net.places_ = std::move(places);
  return net;
}

CharacteristicMatrices compile_matrices(const PTEG& net) {
  const std::size_t n = net.n();
  CharacteristicMatrices m{TropicalMatrix(n, n, Flavor::MaxPlus), TropicalMatrix(n, n, Flavor::MaxPlus),
                           TropicalMatrix(n, n, Flavor::MinPlus), TropicalMatrix(n, n, Flavor::MinPlus)};
  for (const Place& p : net.places()) {
    TropicalMatrix& a = p.marking == 0 ? m.a0 : m.a1;
    TropicalMatrix& b = p.marking == 0 ? m.b0 : m.b1;
    a(p.target, p.source) = max(a(p.target, p.source), TropicalScalar(p.lower));
    b(p.target, p.source) = min(b(p.target, p.source), p.upper);
  }
  return m;
}

const char* to_string(ViolationKind kind) noexcept {
  switch (kind) {
    case ViolationKind::A0: return "A0";
    case ViolationKind::B0: return "B0";
    case ViolationKind::A1: return "A1";
    case ViolationKind::B1: return "B1";
    case ViolationKind::NonDecreasing: return "NONDECREASING";
  }
  return "?";
}

namespace {

// lower(i, j) + x_j <= x_i for every finite lower(i, j).
std::optional<std::pair<std::size_t, std::size_t>> lower_violation(const TropicalMatrix& a,
                                                                   const std::vector<Rational>& from,
                                                                   const std::vector<Rational>& to) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j).is_finite() && to[i] < a(i, j).value() + from[j]) return std::pair{i, j};
  return std::nullopt;
}

// x_i <= upper(i, j) + x_j for every finite upper(i, j).
std::optional<std::pair<std::size_t, std::size_t>> upper_violation(const TropicalMatrix& b,
                                                                   const std::vector<Rational>& from,
                                                                   const std::vector<Rational>& to) {
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (b(i, j).is_finite() && b(i, j).value() + from[j] < to[i]) return std::pair{i, j};
  return std::nullopt;
}

}  // namespace

std::optional<Violation> validate_trajectory(const CharacteristicMatrices& mats, const TrajectoryWindow& traj) {
  const std::size_t n = mats.n();
  if (traj.daters.empty()) throw Error(ErrorCode::DimensionMismatch, "trajectory has no dater vectors");
  for (const auto& x : traj.daters)
    if (x.size() != n) throw Error(ErrorCode::DimensionMismatch, "dater vector size differs from transition count");

  const std::size_t last = traj.daters.size() - 1;
  auto hit = [](std::size_t k, ViolationKind kind, std::pair<std::size_t, std::size_t> at) {
    return Violation{k, kind, at.first, at.second};
  };
  for (std::size_t k = 0; k <= last; ++k) {
    const auto& x = traj.daters[k];
    if (auto v = lower_violation(mats.a0, x, x)) return hit(k, ViolationKind::A0, *v);
    if (auto v = upper_violation(mats.b0, x, x)) return hit(k, ViolationKind::B0, *v);
    if (k == last) break;
    const auto& y = traj.daters[k + 1];
    if (auto v = lower_violation(mats.a1, x, y)) return hit(k, ViolationKind::A1, *v);
    if (auto v = upper_violation(mats.b1, x, y)) return hit(k, ViolationKind::B1, *v);
    for (std::size_t i = 0; i < n; ++i)
      if (y[i] < x[i]) return Violation{k, ViolationKind::NonDecreasing, i, i};
  }
  return std::nullopt;
}

}  // namespace ptegkit
