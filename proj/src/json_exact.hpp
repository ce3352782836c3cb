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

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ptegkit/rational.hpp"
#include "ptegkit/tropical.hpp"

namespace ptegkit::detail {

/// Parses JSON keeping non-integer number literals as their source text
/// (stored as strings), so no value ever passes through a double.
/// Throws Error(SchemaError) on malformed input.
nlohmann::json parse_json_exact(std::string_view text);

/// Integer, "p/q" string, or decimal literal -> Rational. `what` names the
/// field in error messages.
Rational rational_from_json(const nlohmann::json& v, const std::string& what);
/// Like rational_from_json but also accepts "inf", "+inf", "-inf".
TropicalScalar scalar_from_json(const nlohmann::json& v, const std::string& what);
std::vector<Rational> rational_vector_from_json(const nlohmann::json& v, const std::string& what);

}  // namespace ptegkit::detail
