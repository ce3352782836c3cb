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

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ptegkit/death.hpp"
#include "ptegkit/periodic.hpp"
#include "ptegkit/pteg.hpp"
#include "ptegkit/wc.hpp"

namespace ptegkit::detail {

/// Integers that fit in 64 bits are bare numbers; everything else is a
/// string ("p/q", big integers, "-inf", "inf").
nlohmann::json to_json(const Rational& q);
nlohmann::json to_json(const TropicalScalar& s);
nlohmann::json to_json(const TropicalMatrix& m);

nlohmann::json wc_report(const WCVerdict& v, const PTEG& net);
nlohmann::json death_report(const DeathReport& r, const PTEG& net);
nlohmann::json trajectory_report(const TrajectoryWindow& w);
nlohmann::json validation_report(const std::optional<Violation>& v, const PTEG& net);
nlohmann::json matrices_report(const CharacteristicMatrices& mats, const PeriodicSystem& sys, const PTEG& net);

/// Compact serialization; keys come out sorted.
std::string dump(const nlohmann::json& j);

}  // namespace ptegkit::detail
