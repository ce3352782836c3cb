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

#include "ptegkit/wc.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ptegkit {

namespace {

std::int64_t checked(const Rational& q) {
  try {
    return q.to_int64();
  } catch (const std::overflow_error&) {
    throw Error(ErrorCode::Overflow, "Diophantine solution does not fit in 64 bits");
  }
}

std::int64_t magnitude(std::int64_t v) {
  if (v == std::numeric_limits<std::int64_t>::min()) throw Error(ErrorCode::Overflow, "shift out of range");
  return v < 0 ? -v : v;
}

/// Smallest k >= 1 with k * gain + offset > 0, for gain > 0.
Rational first_multiple(const Rational& gain, const Rational& offset) {
  if (offset.sign() > 0) return Rational(1);
  return (-offset / gain).floor() + Rational(1);
}

std::optional<DiophantineSolution> solve(const DiophantineProblem& p, const Rational& offset, bool allow_zero) {
  if (allow_zero && offset.sign() > 0) return DiophantineSolution{0, 0};
  if (p.t == 0 && p.t2 == 0) {
    const bool first = p.w.sign() > 0 && !(p.w < p.w2);
    if (first) return DiophantineSolution{checked(first_multiple(p.w, offset)), 0};
    if (p.w2.sign() > 0) return DiophantineSolution{0, checked(first_multiple(p.w2, offset))};
    return std::nullopt;
  }
  if (p.t == 0) {
    if (p.w.sign() <= 0) return std::nullopt;
    return DiophantineSolution{checked(first_multiple(p.w, offset)), 0};
  }
  if (p.t2 == 0) {
    if (p.w2.sign() <= 0) return std::nullopt;
    return DiophantineSolution{0, checked(first_multiple(p.w2, offset))};
  }
  if ((p.t > 0) == (p.t2 > 0)) return std::nullopt;
  const std::int64_t a = magnitude(p.t);
  const std::int64_t b = magnitude(p.t2);
  const std::int64_t g = std::gcd(a, b);
  const std::int64_t y = b / g;
  const std::int64_t y2 = a / g;
  const Rational gain = Rational(y) * p.w + Rational(y2) * p.w2;
  if (gain.sign() <= 0) return std::nullopt;
  const Rational k = first_multiple(gain, offset);
  return DiophantineSolution{checked(k * Rational(y)), checked(k * Rational(y2))};
}

std::uint64_t to_u64(const Rational& q) {
  if (q.sign() < 0) throw std::logic_error("negative horizon bound");
  return static_cast<std::uint64_t>(checked(q));
}

/// Splices the pump walks into the connection circuit and returns the
/// resulting closed walk.
std::vector<PeriodicNode> splice(const std::vector<PeriodicNode>& circuit, std::size_t i, std::size_t j,
                                 const std::vector<PeriodicNode>& walk_i, std::int64_t copies_i,
                                 const std::vector<PeriodicNode>& walk_j, std::int64_t copies_j) {
  // A single-node circuit is the length-0 circuit; its node is also the end.
  const std::size_t stops = std::max<std::size_t>(circuit.size() - 1, 1);
  auto first_visit = [&](std::size_t row) {
    for (std::size_t s = 0; s < stops; ++s)
      if (circuit[s].row == row) return s;
    throw std::logic_error("connection circuit misses a row");
  };
  const std::size_t at_i = first_visit(i);
  const std::size_t at_j = first_visit(j);
  std::vector<PeriodicNode> out;
  std::int64_t shift = 0;
  auto pump = [&](const std::vector<PeriodicNode>& walk, std::int64_t copies) {
    for (std::int64_t c = 0; c < copies; ++c) {
      const std::int64_t base = out.back().col;
      for (std::size_t s = 1; s < walk.size(); ++s) out.push_back({walk[s].row, base + walk[s].col});
      shift += walk.back().col;
    }
  };
  for (std::size_t s = 0; s < stops; ++s) {
    out.push_back({circuit[s].row, circuit[s].col + shift});
    if (s == at_i) pump(walk_i, copies_i);
    if (s == at_j) pump(walk_j, copies_j);
  }
  if (circuit.size() > 1) out.push_back({circuit.back().row, circuit.back().col + shift});
  return out;
}

}  // namespace

std::optional<DiophantineSolution> solve_homogeneous(const DiophantineProblem& p) { return solve(p, Rational(0), false); }

std::optional<DiophantineSolution> solve_offset(const DiophantineProblem& p) { return solve(p, p.offset, true); }

std::uint64_t WCCertificate::search_bound() const {
  return std::max({horizon_bound, conservative_bound, circuit_span});
}

std::optional<WCCertificate> find_certificate(const PeriodicSystem& sys, const PumpAnalysis& analysis) {
  const std::size_t n = sys.n();
  const auto& s = analysis.pump_sets();
  const TropicalMatrix& r = analysis.connection();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!r(i, j).is_finite()) continue;
      for (const PumpPair& a : s[i])
        for (const PumpPair& b : s[j]) {
          DiophantineProblem prob{a.t, a.w, b.t, b.w, r(i, j).value()};
          auto ray = solve_homogeneous(prob);
          if (!ray) continue;
          auto minimal = solve_offset(prob);
          if (!minimal) throw std::logic_error("offset system unsolvable although the ray exists");

          WCCertificate c;
          c.route = analysis.route();
          c.i = i;
          c.j = j;
          c.pump_i = a;
          c.pump_j = b;
          c.r = prob.offset;
          c.ray = *ray;
          c.minimal = *minimal;
          const Rational pumped = Rational(minimal->y) * Rational(magnitude(a.t));
          const Rational nn(static_cast<std::int64_t>(n));
          c.horizon_bound = to_u64(pumped + Rational(2) * nn + Rational(2) * ((nn * nn) / Rational(2)).floor() + Rational(1));
          c.conservative_bound = to_u64(pumped + Rational(2) * nn + nn * nn + Rational(1));

          auto walk = splice(analysis.connection_circuit(i, j), i, j, analysis.pump_walk(i, a.t), minimal->y,
                             analysis.pump_walk(j, b.t), minimal->y2);
          std::int64_t lo = walk.front().col;
          std::int64_t hi = lo;
          for (const auto& v : walk) {
            lo = std::min(lo, v.col);
            hi = std::max(hi, v.col);
          }
          for (auto& v : walk) v.col -= lo;
          c.circuit_weight = periodic_walk_weight(sys, walk);
          const Rational expected = Rational(minimal->y) * a.w + Rational(minimal->y2) * b.w + c.r;
          if (c.circuit_weight != expected || c.circuit_weight.sign() <= 0 || walk.front() != walk.back())
            throw std::logic_error("materialized certificate circuit does not match its claimed weight");
          c.circuit = std::move(walk);
          c.circuit_span = static_cast<std::uint64_t>(hi - lo);
          return c;
        }
    }
  return std::nullopt;
}

WCVerdict verify_wc(const PeriodicSystem& sys) {
  if (auto window = window_analysis(sys)) {
    if (auto c = find_certificate(sys, *window)) return WCVerdict{false, std::move(c)};
  }
  if (auto c = find_certificate(sys, *definitional_analysis(sys))) return WCVerdict{false, std::move(c)};
  return WCVerdict{true, std::nullopt};
}

WCVerdict verify_wc(const CharacteristicMatrices& mats) { return verify_wc(build_periodic(mats)); }

}  // namespace ptegkit
