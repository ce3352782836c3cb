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

#include <fstream>
#include <sstream>
#include <string>

#include "ptegkit/ptegkit.h"

namespace {

std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(PTEGKIT_FIXTURES) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Net {
  ptegkit_net* handle = nullptr;
  explicit Net(const std::string& json) { status = ptegkit_net_from_json(json.data(), json.size(), &handle); }
  ~Net() { ptegkit_net_free(handle); }
  Net(const Net&) = delete;
  Net& operator=(const Net&) = delete;
  ptegkit_status status;
};

std::string take(char* s) {
  std::string out = s ? s : "";
  ptegkit_string_free(s);
  return out;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("C API: load, inspect and free") {
  Net net(read_fixture("row_c.json"));
  REQUIRE(net.status == PTEGKIT_OK);
  CHECK(ptegkit_net_transition_count(net.handle) == 2);
  char* json = nullptr;
  REQUIRE(ptegkit_matrices(net.handle, &json) == PTEGKIT_OK);
  const std::string m = take(json);
  CHECK(contains(m, "\"P\""));
  CHECK(contains(m, "\"transitions\":[\"t1\",\"t2\"]"));
  ptegkit_net_free(nullptr);
  ptegkit_string_free(nullptr);
}

TEST_CASE("C API: weak consistency") {
  Net ok(read_fixture("row_c.json"));
  int wc = -1;
  char* report = nullptr;
  REQUIRE(ptegkit_check_wc(ok.handle, &wc, &report) == PTEGKIT_OK);
  CHECK(wc == 1);
  CHECK(contains(take(report), "\"weakly_consistent\":true"));

  Net bad(read_fixture("electroplating_ii.json"));
  REQUIRE(ptegkit_check_wc(bad.handle, &wc, &report) == PTEGKIT_OK);
  CHECK(wc == 0);
  const std::string r = take(report);
  CHECK(contains(r, "\"horizon_bound\":180"));
  CHECK(contains(r, "\"minimal\":[81,9]"));
}

TEST_CASE("C API: first death") {
  Net d(read_fixture("row_d.json"));
  char* report = nullptr;
  REQUIRE(ptegkit_first_death(d.handle, -1, &report) == PTEGKIT_OK);
  CHECK(contains(take(report), "\"k_star\":11"));
  REQUIRE(ptegkit_first_death(d.handle, 5, &report) == PTEGKIT_OK);
  CHECK(contains(take(report), "\"k_star\":null"));

  Net c(read_fixture("row_c.json"));
  report = nullptr;
  CHECK(ptegkit_first_death(c.handle, -1, &report) == PTEGKIT_ERR_IS_WEAKLY_CONSISTENT);
  CHECK(report == nullptr);
  CHECK(std::string(ptegkit_last_error()).size() > 0);
}

TEST_CASE("C API: synthesize and validate round trip") {
  Net c(read_fixture("row_c.json"));
  char* traj = nullptr;
  REQUIRE(ptegkit_synthesize(c.handle, 3, "[0, 1, 0.5, 2, 3, 4, 5, 6]", &traj) == PTEGKIT_OK);
  const std::string t = take(traj);
  int consistent = -1;
  char* report = nullptr;
  REQUIRE(ptegkit_validate(c.handle, t.c_str(), &consistent, &report) == PTEGKIT_OK);
  CHECK(consistent == 1);
  take(report);

  REQUIRE(ptegkit_synthesize(c.handle, 1, "[[0, 0], [1, 1]]", &traj) == PTEGKIT_OK);
  take(traj);
  CHECK(ptegkit_synthesize(c.handle, 3, "[0, 1]", &traj) == PTEGKIT_ERR_DIMENSION_MISMATCH);

  Net d(read_fixture("row_d.json"));
  CHECK(ptegkit_synthesize(d.handle, 11, nullptr, &traj) == PTEGKIT_ERR_HORIZON_INFEASIBLE);

  const char* wrong = R"({"daters": [[0, 3], [2, 4], [4, 5], [6, 6], [8, 7]]})";
  REQUIRE(ptegkit_validate(d.handle, wrong, &consistent, &report) == PTEGKIT_OK);
  CHECK(consistent == 0);
  const std::string v = take(report);
  CHECK(contains(v, "\"k\":4"));
  CHECK(contains(v, "\"kind\":\"A0\""));
}

TEST_CASE("C API: error statuses") {
  const std::string garbage = "{not json";
  ptegkit_net* h = nullptr;
  CHECK(ptegkit_net_from_json(garbage.data(), garbage.size(), &h) == PTEGKIT_ERR_SCHEMA);
  CHECK(h == nullptr);
  const std::string inverted =
      R"({"transitions":["a"],"places":[{"from":"a","to":"a","marking":1,"lb":3,"ub":2}]})";
  CHECK(ptegkit_net_from_json(inverted.data(), inverted.size(), &h) == PTEGKIT_ERR_INTERVAL_INVERTED);
  const std::string marking =
      R"({"transitions":["a"],"places":[{"from":"a","to":"a","marking":2,"lb":1,"ub":2}]})";
  CHECK(ptegkit_net_from_json(marking.data(), marking.size(), &h) == PTEGKIT_ERR_MARKING_NOT_BINARY);
  const std::string empty = R"({"transitions":[],"places":[]})";
  CHECK(ptegkit_net_from_json(empty.data(), empty.size(), &h) == PTEGKIT_ERR_EMPTY_NET);
  CHECK(ptegkit_net_from_json(nullptr, 0, &h) == PTEGKIT_ERR_INVALID_ARGUMENT);
  CHECK(ptegkit_check_wc(nullptr, nullptr, nullptr) == PTEGKIT_ERR_INVALID_ARGUMENT);
  CHECK(std::string(ptegkit_status_name(PTEGKIT_ERR_NOT_IN_GAMMA)) == "NOT_IN_GAMMA");
}

TEST_CASE("C API: thread override does not change results") {
  Net n(read_fixture("electroplating_ii.json"));
  char* one = nullptr;
  char* four = nullptr;
  int wc = 0;
  ptegkit_set_threads(1);
  REQUIRE(ptegkit_check_wc(n.handle, &wc, &one) == PTEGKIT_OK);
  ptegkit_set_threads(4);
  REQUIRE(ptegkit_check_wc(n.handle, &wc, &four) == PTEGKIT_OK);
  ptegkit_set_threads(0);
  CHECK(take(one) == take(four));
}
