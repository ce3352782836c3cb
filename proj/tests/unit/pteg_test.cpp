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

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "ptegkit/pteg.hpp"

using namespace ptegkit;

namespace {
const TropicalScalar kNeg = TropicalScalar::neg_inf();
const TropicalScalar kPos = TropicalScalar::pos_inf();

ErrorCode parse_error(const std::string& doc) {
  try {
    parse_pteg(doc);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("document was accepted");
  return ErrorCode::InvalidArgument;
}

TrajectoryWindow linear_law(std::size_t k_max) {
  TrajectoryWindow w;
  for (std::size_t k = 0; k <= k_max; ++k) {
    const auto kk = static_cast<std::int64_t>(k);
    w.daters.push_back({Rational(2 * kk), Rational(3 + kk)});
  }
  return w;
}
}  // namespace

TEST_CASE("parse row a") {
  const PTEG net = parse_pteg(oracle::read_fixture("row_a.json"));
  CHECK(net.n() == 2);
  CHECK(net.places().size() == 3);
  CHECK(net.places()[1] == Place{0, 0, 1, Rational(1), TropicalScalar(1)});
  CHECK(net.places()[0].upper == kPos);
}

TEST_CASE("parse electroplating case ii") {
  const PTEG net = parse_pteg(oracle::read_fixture("electroplating_ii.json"));
  CHECK(net.n() == 9);
  const Place& cap = net.places().back();
  CHECK(net.transitions()[cap.source] == "t0out");
  CHECK(net.transitions()[cap.target] == "t0in");
  CHECK(cap.marking == 1);
  CHECK(cap.lower == Rational(0));
  CHECK(cap.upper == kPos);
}

TEST_CASE("parse is exact for decimals and fractions") {
  const PTEG net = parse_pteg(
      R"({"transitions":["a","b"],"places":[{"from":"a","to":"b","marking":0,"lb":0.1,"ub":"7/3"},)"
      R"({"from":"b","to":"a","marking":1,"lb":"1.5","ub":1e1}]})");
  CHECK(net.places()[0].lower == Rational(1, 10));
  CHECK(net.places()[0].upper == TropicalScalar(Rational(7, 3)));
  CHECK(net.places()[1].lower == Rational(3, 2));
  CHECK(net.places()[1].upper == TropicalScalar(10));
}

TEST_CASE("parse errors") {
  const std::string head = R"({"transitions":["a","b"],"places":[{"from":"a","to":"b",)";
  CHECK(parse_error(head + R"("marking":2,"lb":0,"ub":"inf"}]})") == ErrorCode::MarkingNotBinary);
  CHECK(parse_error(head + R"("marking":-1,"lb":0,"ub":"inf"}]})") == ErrorCode::MarkingNotBinary);
  CHECK(parse_error(head + R"("marking":0,"lb":5,"ub":3}]})") == ErrorCode::IntervalInverted);
  CHECK(parse_error(head + R"("marking":0,"lb":-1,"ub":3}]})") == ErrorCode::SchemaError);
  CHECK(parse_error(head + R"("marking":0,"lb":"inf","ub":3}]})") == ErrorCode::SchemaError);
  CHECK(parse_error(head + R"("marking":0,"ub":3}]})") == ErrorCode::SchemaError);
  CHECK(parse_error(R"({"transitions":["a"],"places":[{"from":"a","to":"z","marking":0,"lb":0,"ub":1}]})") ==
        ErrorCode::SchemaError);
  CHECK(parse_error(R"({"transitions":[],"places":[]})") == ErrorCode::EmptyNet);
  CHECK(parse_error(R"({"transitions":["a","a"],"places":[]})") == ErrorCode::SchemaError);
  CHECK(parse_error("{not json") == ErrorCode::SchemaError);
  CHECK(parse_error("[1,2]") == ErrorCode::SchemaError);
}

TEST_CASE("compile row c and row d") {
  const auto c = compile_matrices(parse_pteg(oracle::read_fixture("row_c.json")));
  CHECK(c.a0 == TropicalMatrix::from_rows({{kNeg, kNeg}, {0, kNeg}}));
  CHECK(c.a1 == TropicalMatrix::from_rows({{2, kNeg}, {kNeg, 1}}));
  CHECK(c.b0 == TropicalMatrix::from_rows({{kPos, kPos}, {kPos, kPos}}, Flavor::MinPlus));
  CHECK(c.b1 == TropicalMatrix::from_rows({{2, kPos}, {kPos, 1}}, Flavor::MinPlus));
  const auto d = compile_matrices(parse_pteg(oracle::read_fixture("row_d.json")));
  CHECK(d.a0 == c.a0);
  CHECK(d.a1 == c.a1);
  CHECK(d.b1 == c.b1);
  CHECK(d.b0 == TropicalMatrix::from_rows({{kPos, kPos}, {10, kPos}}, Flavor::MinPlus));
}

TEST_CASE("parallel places conjoin") {
  const auto m = compile_matrices(make_pteg({"t1", "t2"}, {Place{0, 1, 0, Rational(1), TropicalScalar(5)},
                                                           Place{0, 1, 0, Rational(2), TropicalScalar(9)}}));
  CHECK(m.a0(1, 0) == TropicalScalar(2));
  CHECK(m.b0(1, 0) == TropicalScalar(5));
}

TEST_CASE("compilation is covariant under relabeling") {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 50; ++it) {
    const PTEG net = oracle::random_net(rng);
    const std::size_t n = net.n();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::string> names(n);
    for (std::size_t i = 0; i < n; ++i) names[perm[i]] = net.transitions()[i];
    std::vector<Place> places = net.places();
    for (auto& p : places) {
      p.source = perm[p.source];
      p.target = perm[p.target];
    }
    const auto a = compile_matrices(net);
    const auto b = compile_matrices(make_pteg(names, places));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        CHECK(a.a0(i, j) == b.a0(perm[i], perm[j]));
        CHECK(a.a1(i, j) == b.a1(perm[i], perm[j]));
        CHECK(a.b0(i, j) == b.b0(perm[i], perm[j]));
        CHECK(a.b1(i, j) == b.b1(perm[i], perm[j]));
      }
    CHECK(compile_matrices(net).a0 == a.a0);
  }
}

TEST_CASE("validate the row-c linear law") {
  const auto m = compile_matrices(parse_pteg(oracle::read_fixture("row_c.json")));
  CHECK_FALSE(validate_trajectory(m, linear_law(3)));
  const auto v = validate_trajectory(m, linear_law(4));
  REQUIRE(v);
  CHECK(v->k == 4);
  CHECK(v->kind == ViolationKind::A0);
  CHECK(v->row == 1);
}

TEST_CASE("validate edge cases and ordering") {
  const auto free_net = compile_matrices(make_pteg({"a", "b"}, {}));
  CHECK_FALSE(validate_trajectory(free_net, TrajectoryWindow{{{Rational(5), Rational(-3)}}}));
  CHECK_THROWS_AS(validate_trajectory(free_net, TrajectoryWindow{{{Rational(5)}}}), Error);
  CHECK_THROWS_AS(validate_trajectory(free_net, TrajectoryWindow{}), Error);

  const auto v = validate_trajectory(free_net, TrajectoryWindow{{{Rational(1), Rational(1)}, {Rational(1), Rational(0)}}});
  REQUIRE(v);
  CHECK(*v == Violation{0, ViolationKind::NonDecreasing, 1, 1});

  // B1 on row 0 and A1 on row 1 at the same k: A1 is reported first.
  const auto m = compile_matrices(make_pteg(
      {"a", "b"}, {Place{0, 0, 1, Rational(0), TropicalScalar(1)}, Place{1, 1, 1, Rational(5), TropicalScalar::pos_inf()}}));
  const auto w = validate_trajectory(m, TrajectoryWindow{{{Rational(0), Rational(0)}, {Rational(3), Rational(1)}}});
  REQUIRE(w);
  CHECK(*w == Violation{0, ViolationKind::A1, 1, 1});
}

TEST_CASE("validate agrees with direct place-by-place evaluation") {
  std::mt19937_64 rng(32);
  std::uniform_int_distribution<int> step(0, 6);
  for (int it = 0; it < 300; ++it) {
    const PTEG net = oracle::random_net(rng);
    const std::size_t k = static_cast<std::size_t>(it % 4);
    TrajectoryWindow w;
    std::vector<Rational> x(net.n());
    for (auto& v : x) v = Rational(step(rng));
    for (std::size_t e = 0; e <= k; ++e) {
      w.daters.push_back(x);
      for (auto& v : x) v += Rational(step(rng) - 1);
    }
    CHECK(!validate_trajectory(compile_matrices(net), w).has_value() == oracle::trajectory_ok(net, w.daters));
  }
}

TEST_CASE("parse trajectory") {
  const auto w = parse_trajectory(R"({"daters":[[0,"1/2"],[1.25,3]]})");
  CHECK(w.horizon() == 1);
  CHECK(w.daters[0][1] == Rational(1, 2));
  CHECK(w.daters[1][0] == Rational(5, 4));
  CHECK_THROWS_AS(parse_trajectory(R"({"daters":[[true]]})"), Error);
}
