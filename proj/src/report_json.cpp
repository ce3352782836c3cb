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

#include "report_json.hpp"

namespace ptegkit::detail {

using nlohmann::json;

json to_json(const Rational& q) {
  if (q.is_small() && q.is_integer()) return q.to_int64();
  return q.to_string();
}

json to_json(const TropicalScalar& s) {
  if (s.is_finite()) return to_json(s.value());
  return s.to_string();
}

json to_json(const TropicalMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

json pump_json(const PumpPair& p) { return json{{"t", p.t}, {"w", to_json(p.w)}}; }

json solution_json(const DiophantineSolution& s) { return json::array({s.y, s.y2}); }

json nodes_json(const std::vector<PeriodicNode>& nodes) {
  json out = json::array();
  for (const auto& v : nodes) out.push_back(json::array({v.row, v.col}));
  return out;
}

}  // namespace

json wc_report(const WCVerdict& v, const PTEG& net) {
  json out{{"weakly_consistent", v.weakly_consistent}, {"certificate", nullptr}, {"horizon_bound", nullptr}};
  if (!v.certificate) return out;
  const WCCertificate& c = *v.certificate;
  out["horizon_bound"] = c.horizon_bound;
  out["certificate"] = json{
      {"route", c.route},
      {"i", c.i},
      {"j", c.j},
      {"transition_i", net.transitions()[c.i]},
      {"transition_j", net.transitions()[c.j]},
      {"pump_i", pump_json(c.pump_i)},
      {"pump_j", pump_json(c.pump_j)},
      {"r", to_json(c.r)},
      {"ray", solution_json(c.ray)},
      {"minimal", solution_json(c.minimal)},
      {"horizon_bound", c.horizon_bound},
      {"conservative_horizon_bound", c.conservative_bound},
      {"search_bound", c.search_bound()},
      {"circuit", json{{"nodes", nodes_json(c.circuit)}, {"weight", to_json(c.circuit_weight)}, {"span", c.circuit_span}}},
  };
  return out;
}

json death_report(const DeathReport& r, const PTEG& net) {
  json out{{"k_star", nullptr}, {"max_firings", nullptr}, {"horizon_bound", r.horizon_bound}, {"probes", r.probes},
           {"witness", nullptr}};
  if (r.k_star) {
    out["k_star"] = *r.k_star;
    out["max_firings"] = *r.max_firings();
  }
  if (r.witness) {
    const std::size_t n = net.n();
    std::vector<PeriodicNode> nodes;
    for (std::size_t v : r.witness->nodes) nodes.push_back({v % n, static_cast<std::int64_t>(v / n)});
    out["witness"] = json{{"nodes", nodes_json(nodes)}, {"weight", to_json(r.witness->weight)}};
  }
  return out;
}

json trajectory_report(const TrajectoryWindow& w) {
  json daters = json::array();
  for (const auto& x : w.daters) {
    json row = json::array();
    for (const auto& q : x) row.push_back(to_json(q));
    daters.push_back(std::move(row));
  }
  return json{{"daters", std::move(daters)}};
}

json validation_report(const std::optional<Violation>& v, const PTEG& net) {
  json out{{"consistent", !v.has_value()}, {"violation", nullptr}};
  if (v) {
    out["violation"] = json{{"k", v->k},
                            {"kind", to_string(v->kind)},
                            {"row", v->row},
                            {"col", v->col},
                            {"transition", net.transitions()[v->row]}};
  }
  return out;
}

json matrices_report(const CharacteristicMatrices& mats, const PeriodicSystem& sys, const PTEG& net) {
  return json{{"transitions", net.transitions()}, {"A0", to_json(mats.a0)}, {"A1", to_json(mats.a1)},
              {"B0", to_json(mats.b0)},           {"B1", to_json(mats.b1)}, {"P", to_json(sys.p)},
              {"I", to_json(sys.i)},              {"C", to_json(sys.c)}};
}

std::string dump(const json& j) { return j.dump(); }

}  // namespace ptegkit::detail
