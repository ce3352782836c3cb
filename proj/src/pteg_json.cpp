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

#include <map>
#include <string>

#include "json_exact.hpp"
#include "ptegkit/pteg.hpp"

namespace ptegkit {
namespace detail {

namespace {

using json = nlohmann::json;

/// DOM builder that stores float literals as strings.
class ExactSax {
 public:
  explicit ExactSax(json& root) : dom_(root, true) {}

  bool null() { return dom_.null(); }
  bool boolean(bool v) { return dom_.boolean(v); }
  bool number_integer(json::number_integer_t v) { return dom_.number_integer(v); }
  bool number_unsigned(json::number_unsigned_t v) { return dom_.number_unsigned(v); }
  bool number_float(json::number_float_t, const json::string_t& raw) {
    json::string_t copy = raw;
    return dom_.string(copy);
  }
  bool string(json::string_t& v) { return dom_.string(v); }
  bool binary(json::binary_t& v) { return dom_.binary(v); }
  bool start_object(std::size_t n) { return dom_.start_object(n); }
  bool key(json::string_t& k) { return dom_.key(k); }
  bool end_object() { return dom_.end_object(); }
  bool start_array(std::size_t n) { return dom_.start_array(n); }
  bool end_array() { return dom_.end_array(); }
  template <class Exception>
  bool parse_error(std::size_t pos, const std::string& tok, const Exception& ex) {
    return dom_.parse_error(pos, tok, ex);
  }

 private:
  nlohmann::detail::json_sax_dom_parser<json> dom_;
};

}  // namespace

json parse_json_exact(std::string_view text) {
  json root;
  ExactSax sax(root);
  try {
    json::sax_parse(text.begin(), text.end(), &sax);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::SchemaError, std::string("malformed JSON: ") + e.what());
  }
  return root;
}

Rational rational_from_json(const json& v, const std::string& what) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) {
      const auto u = v.get<json::number_unsigned_t>();
      return Rational(mpq_class(mpz_class(std::to_string(u))));
    }
    return Rational(v.get<std::int64_t>());
  }
  if (v.is_string()) {
    if (auto q = Rational::try_parse(v.get_ref<const std::string&>())) return *q;
  }
  throw Error(ErrorCode::SchemaError, what + ": expected an exact number, got " + v.dump());
}

TropicalScalar scalar_from_json(const json& v, const std::string& what) {
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    if (s == "inf" || s == "+inf") return TropicalScalar::pos_inf();
    if (s == "-inf") return TropicalScalar::neg_inf();
  }
  return TropicalScalar(rational_from_json(v, what));
}

std::vector<Rational> rational_vector_from_json(const json& v, const std::string& what) {
  if (!v.is_array()) throw Error(ErrorCode::SchemaError, what + ": expected an array");
  std::vector<Rational> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(rational_from_json(v[i], what + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace detail

namespace {

using nlohmann::json;

const json& field(const json& obj, const char* name, const std::string& where) {
  auto it = obj.find(name);
  if (it == obj.end()) throw Error(ErrorCode::SchemaError, where + ": missing field \"" + name + "\"");
  return *it;
}

}  // namespace

PTEG parse_pteg(std::string_view text) {
  const json doc = detail::parse_json_exact(text);
  if (!doc.is_object()) throw Error(ErrorCode::SchemaError, "net document must be a JSON object");

  const json& ts = field(doc, "transitions", "net");
  if (!ts.is_array()) throw Error(ErrorCode::SchemaError, "net: \"transitions\" must be an array");
  std::vector<std::string> names;
  std::map<std::string, std::size_t> index;
  for (const json& t : ts) {
    if (!t.is_string()) throw Error(ErrorCode::SchemaError, "net: transition names must be strings");
    const auto& name = t.get_ref<const std::string&>();
    if (!index.emplace(name, names.size()).second)
      throw Error(ErrorCode::SchemaError, "net: duplicate transition \"" + name + "\"");
    names.push_back(name);
  }

  const json& ps = field(doc, "places", "net");
  if (!ps.is_array()) throw Error(ErrorCode::SchemaError, "net: \"places\" must be an array");
  std::vector<Place> places;
  for (std::size_t k = 0; k < ps.size(); ++k) {
    const json& p = ps[k];
    const std::string where = "places[" + std::to_string(k) + "]";
    if (!p.is_object()) throw Error(ErrorCode::SchemaError, where + ": must be an object");
    auto transition = [&](const char* key) {
      const json& v = field(p, key, where);
      if (!v.is_string()) throw Error(ErrorCode::SchemaError, where + "." + key + ": must be a transition name");
      auto it = index.find(v.get_ref<const std::string&>());
      if (it == index.end()) throw Error(ErrorCode::SchemaError, where + "." + key + ": unknown transition " + v.dump());
      return it->second;
    };
    Place place;
    place.source = transition("from");
    place.target = transition("to");
    const json& m = field(p, "marking", where);
    if (!m.is_number_integer()) throw Error(ErrorCode::SchemaError, where + ".marking: must be an integer");
    if (m.is_number_unsigned() ? m.get<json::number_unsigned_t>() > 1 : (m.get<std::int64_t>() < 0 || m.get<std::int64_t>() > 1))
      throw Error(ErrorCode::MarkingNotBinary,
                  where + ": marking " + m.dump() + " is not 0 or 1; split the place into a chain of 1-marked places first");
    place.marking = static_cast<int>(m.get<std::int64_t>());
    place.lower = detail::rational_from_json(field(p, "lb", where), where + ".lb");
    place.upper = detail::scalar_from_json(field(p, "ub", where), where + ".ub");
    places.push_back(std::move(place));
  }
  return make_pteg(std::move(names), std::move(places));
}

TrajectoryWindow parse_trajectory(std::string_view text) {
  const json doc = detail::parse_json_exact(text);
  if (!doc.is_object()) throw Error(ErrorCode::SchemaError, "trajectory document must be a JSON object");
  const json& ds = field(doc, "daters", "trajectory");
  if (!ds.is_array()) throw Error(ErrorCode::SchemaError, "trajectory: \"daters\" must be an array");
  TrajectoryWindow w;
  for (std::size_t k = 0; k < ds.size(); ++k)
    w.daters.push_back(detail::rational_vector_from_json(ds[k], "daters[" + std::to_string(k) + "]"));
  return w;
}

}  // namespace ptegkit
