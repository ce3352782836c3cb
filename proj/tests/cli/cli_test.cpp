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

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

std::string fixture(const std::string& name) { return std::string(PTEGKIT_FIXTURES) + "/" + name; }

fs::path scratch(const std::string& name) {
  fs::create_directories(PTEGKIT_SCRATCH);
  return fs::path(PTEGKIT_SCRATCH) / name;
}

int run(const std::string& args) {
  const std::string cmd = std::string("\"") + PTEGKIT_CLI + "\" " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("check-wc exit codes and report") {
  const auto out = scratch("wc_ii.json");
  CHECK(run("check-wc " + fixture("row_c.json")) == 0);
  CHECK(run("check-wc " + fixture("electroplating_ii.json") + " --output " + out.string()) == 10);
  const std::string r = slurp(out);
  CHECK(contains(r, "\"weakly_consistent\":false"));
  CHECK(contains(r, "\"transition_i\":\"t0in\""));
}

TEST_CASE("first-death exit codes") {
  const auto out = scratch("death_d.json");
  CHECK(run("first-death " + fixture("row_d.json") + " --output " + out.string()) == 0);
  CHECK(contains(slurp(out), "\"k_star\":11"));
  CHECK(run("first-death " + fixture("row_c.json")) == 11);
  CHECK(run("first-death " + fixture("row_c.json") + " --bound 5") == 0);
}

TEST_CASE("synthesize and validate") {
  const auto seed = scratch("seed.json");
  const auto traj = scratch("traj_c.json");
  write(seed, "[1, 2]");
  CHECK(run("synthesize " + fixture("row_c.json") + " -K 0 --seed-vector " + seed.string() + " --output " +
            traj.string()) == 0);
  const std::string echoed = slurp(traj);
  CHECK(echoed.rfind("{\"daters\":[[1,2]]}", 0) == 0);
  CHECK(run("synthesize " + fixture("row_c.json") + " -K 6 --output " + traj.string()) == 0);
  CHECK(run("validate " + fixture("row_c.json") + " " + traj.string()) == 0);
  CHECK(run("synthesize " + fixture("row_d.json") + " -K 11") == 12);
  CHECK(run("synthesize " + fixture("row_c.json") + " -K 3 --seed-vector " + seed.string()) == 2);

  // Linear law x1(k) = 2k, x2(k) = k + 3 breaks x2 >= x1 at k = 4.
  const auto linear = scratch("linear.json");
  const auto verdict = scratch("verdict.json");
  write(linear, R"({"daters": [[0, 3], [2, 4], [4, 5], [6, 6], [8, 7]]})");
  CHECK(run("validate " + fixture("row_d.json") + " " + linear.string() + " --output " + verdict.string()) == 13);
  const std::string v = slurp(verdict);
  CHECK(contains(v, "\"k\":4"));
  CHECK(contains(v, "\"kind\":\"A0\""));
}

TEST_CASE("input errors exit with 2") {
  const auto bad = scratch("bad.json");
  write(bad, R"({"transitions": ["a"], "places": [{"from": "a", "to": "b", "marking": 0, "lb": 0, "ub": 1}]})");
  CHECK(run("check-wc " + bad.string()) == 2);
  CHECK(run("check-wc " + scratch("missing.json").string()) == 2);
  CHECK(run("matrices") != 0);
}

TEST_CASE("output is byte-deterministic") {
  const auto a = scratch("det_a.json");
  const auto b = scratch("det_b.json");
  for (const char* sub : {"check-wc", "matrices"}) {
    run(std::string(sub) + " " + fixture("electroplating_ii.json") + " --output " + a.string());
    run(std::string(sub) + " " + fixture("electroplating_ii.json") + " --output " + b.string());
    CHECK(slurp(a) == slurp(b));
    CHECK_FALSE(slurp(a).empty());
  }
}
