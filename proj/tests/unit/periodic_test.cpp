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

#include <doctest.h>

#include <random>

#include "block_graph.hpp"
#include "oracles.hpp"
#include "ptegkit/periodic.hpp"

using namespace ptegkit;

namespace {
const TropicalScalar kNeg = TropicalScalar::neg_inf();

PeriodicSystem fixture_system(const char* name) {
  return build_periodic(compile_matrices(parse_pteg(oracle::read_fixture(name))));
}

bool contains(const PumpSet& s, std::int64_t t, const Rational& w) {
  for (const auto& p : s)
    if (p.t == t) return p.w == w;
  return false;
}

void check_walk(const PeriodicSystem& sys, const std::vector<PeriodicNode>& walk, std::size_t row, std::int64_t t,
                const Rational& w) {
  REQUIRE_FALSE(walk.empty());
  CHECK(walk.front() == PeriodicNode{row, 0});
  CHECK(walk.back() == PeriodicNode{row, t});
  CHECK(periodic_walk_weight(sys, walk) == w);
}
}  // namespace

TEST_CASE("periodic system of row c and row d") {
  const auto c = fixture_system("row_c.json");
  CHECK(c.p == TropicalMatrix::from_rows({{-2, kNeg}, {kNeg, -1}}));
  CHECK(c.i == TropicalMatrix::from_rows({{2, kNeg}, {kNeg, 1}}));
  CHECK(c.c == TropicalMatrix::from_rows({{kNeg, kNeg}, {0, kNeg}}));
  const auto d = fixture_system("row_d.json");
  CHECK(d.p == c.p);
  CHECK(d.i == c.i);
  CHECK(d.c == TropicalMatrix::from_rows({{kNeg, -10}, {0, kNeg}}));
}

TEST_CASE("unconstrained net") {
  const auto s = build_periodic(compile_matrices(make_pteg({"a", "b"}, {})));
  CHECK(s.p == TropicalMatrix(2, 2, Flavor::MaxPlus));
  CHECK(s.i == TropicalMatrix::identity(2));
  CHECK(connection_matrix(s) == TropicalMatrix::identity(2));
}

TEST_CASE("block matrices") {
  const auto s = fixture_system("row_c.json");
  CHECK(build_block(s, 0).m == s.c);
  const auto m1 = build_block(s, 1).m;
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t q = 0; q < 2; ++q) {
      CHECK(m1(r, q) == s.c(r, q));
      CHECK(m1(2 + r, 2 + q) == s.c(r, q));
      CHECK(m1(r, 2 + q) == s.p(r, q));
      CHECK(m1(2 + r, q) == s.i(r, q));
    }
}

TEST_CASE("block arcs are exactly the periodic arcs within the columns") {
  std::mt19937_64 rng(41);
  for (int it = 0; it < 40; ++it) {
    const auto s = build_periodic(compile_matrices(oracle::random_net(rng, 3)));
    const std::size_t n = s.n();
    for (std::size_t k = 0; k <= 4; ++k) {
      const auto m = build_block(s, k).m;
      const auto g = detail::block_graph(s, k);
      for (std::size_t a = 0; a < m.rows(); ++a)
        for (std::size_t b = 0; b < m.cols(); ++b) {
          const PeriodicNode from{b % n, static_cast<std::int64_t>(b / n)};
          const PeriodicNode to{a % n, static_cast<std::int64_t>(a / n)};
          const auto w = periodic_arc(s, from, to);
          CHECK(m(a, b) == (w ? TropicalScalar(*w) : kNeg));
          CHECK(g.weight(a, b) == w);
        }
    }
  }
}

TEST_CASE("walk weights are translation invariant") {
  std::mt19937_64 rng(42);
  const auto s = fixture_system("electroplating_ii.json");
  const auto analysis = definitional_analysis(s);
  for (std::size_t i = 0; i < s.n(); ++i)
    for (const auto& p : analysis->pump_sets()[i]) {
      auto walk = analysis->pump_walk(i, p.t);
      const auto shift = std::uniform_int_distribution<std::int64_t>(-50, 50)(rng);
      for (auto& v : walk) v.col += shift;
      CHECK(periodic_walk_weight(s, walk) == p.w);
    }
}

TEST_CASE("definitional pump sets match enumeration") {
  std::mt19937_64 rng(43);
  for (int it = 0; it < 60; ++it) {
    const auto s = build_periodic(compile_matrices(oracle::random_net(rng, 4)));
    const auto analysis = definitional_analysis(s);
    for (std::size_t i = 0; i < s.n(); ++i) {
      const auto brute = oracle::pump_set_brute(s, i);
      const auto& got = analysis->pump_sets()[i];
      REQUIRE(got.size() == brute.size());
      CHECK(got.size() <= 2 * s.n() + 1);
      for (const auto& p : got) {
        CHECK(brute.at(p.t) == p.w);
        check_walk(s, analysis->pump_walk(i, p.t), i, p.t, p.w);
        CHECK(analysis->pump_walk(i, p.t).size() <= s.n() + 1);
      }
      CHECK(brute.count(0) == 1);
      CHECK(Rational(0) <= brute.at(0));
    }
  }
}

TEST_CASE("definitional connection matrix matches enumeration") {
  std::mt19937_64 rng(44);
  for (int it = 0; it < 40; ++it) {
    const auto s = build_periodic(compile_matrices(oracle::random_net(rng, 3)));
    const auto analysis = definitional_analysis(s);
    const auto& r = analysis->connection();
    for (std::size_t i = 0; i < s.n(); ++i)
      for (std::size_t j = 0; j < s.n(); ++j) {
        CHECK(r(i, j) == r(j, i));
        const auto brute = oracle::connection_brute(s, i, j);
        CHECK(r(i, j) == (brute ? TropicalScalar(*brute) : kNeg));
        if (!brute) continue;
        const auto circuit = analysis->connection_circuit(i, j);
        REQUIRE_FALSE(circuit.empty());
        CHECK(circuit.front() == circuit.back());
        CHECK(circuit.size() - 1 <= s.n() * s.n());
        CHECK(periodic_walk_weight(s, circuit) == *brute);
        bool has_i = false;
        bool has_j = false;
        for (const auto& v : circuit) {
          has_i = has_i || v.row == i;
          has_j = has_j || v.row == j;
        }
        CHECK(has_i);
        CHECK(has_j);
      }
  }
}

TEST_CASE("electroplating window extraction") {
  const auto s = fixture_system("electroplating_ii.json");
  const auto w = window_analysis(s);
  REQUIRE(w);
  CHECK(w->route() == "window");
  CHECK(contains(w->pump_sets()[0], 1, Rational(92)));
  CHECK(contains(w->pump_sets()[2], -9, Rational(-819)));
  CHECK(w->connection()(0, 2) == TropicalScalar(-73));
  CHECK(w->connection()(2, 0) == TropicalScalar(-73));
  check_walk(s, w->pump_walk(0, 1), 0, 1, Rational(92));
  check_walk(s, w->pump_walk(2, -9), 2, -9, Rational(-819));
  const auto circuit = w->connection_circuit(0, 2);
  CHECK(circuit.front() == circuit.back());
  CHECK(periodic_walk_weight(s, circuit) == Rational(-73));
}

TEST_CASE("electroplating definitional values") {
  // Walks of length <= n cannot realize shift -9 at row 3 except through
  // pure P-arcs, and circuits of length <= 81 reach -107 at best.
  const auto s = fixture_system("electroplating_ii.json");
  const auto d = definitional_analysis(s);
  CHECK(contains(d->pump_sets()[0], 1, Rational(92)));
  CHECK_FALSE(contains(d->pump_sets()[2], -9, Rational(-819)));
  CHECK(d->connection()(0, 2) == TropicalScalar(-107));
}

TEST_CASE("window values are realized by genuine walks") {
  std::mt19937_64 rng(45);
  int checked = 0;
  for (int it = 0; it < 80; ++it) {
    const auto s = build_periodic(compile_matrices(oracle::random_net(rng, 3)));
    const auto w = window_analysis(s);
    if (!w) continue;
    ++checked;
    for (std::size_t i = 0; i < s.n(); ++i) {
      for (const auto& p : w->pump_sets()[i]) check_walk(s, w->pump_walk(i, p.t), i, p.t, p.w);
      for (std::size_t j = 0; j < s.n(); ++j) {
        CHECK(w->connection()(i, j) == w->connection()(j, i));
        if (!w->connection()(i, j).is_finite()) continue;
        const auto circuit = w->connection_circuit(i, j);
        REQUIRE_FALSE(circuit.empty());
        CHECK(circuit.front() == circuit.back());
        CHECK(TropicalScalar(periodic_walk_weight(s, circuit)) == w->connection()(i, j));
      }
    }
  }
  CHECK(checked > 10);
}
