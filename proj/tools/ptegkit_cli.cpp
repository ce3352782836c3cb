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

// Command-line front end. Talks to the library only through ptegkit.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ptegkit/ptegkit.h"

namespace {

enum Exit : int {
  kOk = 0,
  kInternal = 1,
  kInputError = 2,
  kNotWeaklyConsistent = 10,
  kWeaklyConsistent = 11,
  kHorizonInfeasible = 12,
  kViolation = 13,
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Net {
 public:
  explicit Net(const std::string& path) {
    const std::string text = read_file(path);
    if (ptegkit_status s = ptegkit_net_from_json(text.data(), text.size(), &net_); s != PTEGKIT_OK)
      throw InputError(path + ": " + ptegkit_status_name(s) + ": " + ptegkit_last_error());
  }
  ~Net() { ptegkit_net_free(net_); }
  Net(const Net&) = delete;
  Net& operator=(const Net&) = delete;
  const ptegkit_net* get() const { return net_; }

 private:
  ptegkit_net* net_ = nullptr;
};

/// Takes ownership of a library string.
std::string take(char* s) {
  std::string out = s == nullptr ? std::string() : std::string(s);
  ptegkit_string_free(s);
  return out;
}

void emit(const std::string& json, const std::string& output) {
  if (output.empty()) {
    std::cout << json << '\n';
    return;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) throw InputError("cannot write " + output);
  out << json << '\n';
}

int fail(ptegkit_status s) {
  std::cerr << "error: " << ptegkit_status_name(s) << ": " << ptegkit_last_error() << '\n';
  switch (s) {
    case PTEGKIT_ERR_INTERNAL:
    case PTEGKIT_ERR_OVERFLOW: return kInternal;
    case PTEGKIT_ERR_IS_WEAKLY_CONSISTENT: return kWeaklyConsistent;
    case PTEGKIT_ERR_HORIZON_INFEASIBLE: return kHorizonInfeasible;
    default: return kInputError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weak-consistency analysis of P-time event graphs"};
  app.require_subcommand(1);
  std::string output;
  app.add_option("--output", output, "Write the JSON result to this file instead of stdout");

  std::string net_path;
  std::string traj_path;
  std::string seed_path;
  std::optional<std::int64_t> bound;
  std::uint64_t horizon = 0;

  auto* check = app.add_subcommand("check-wc", "Decide weak consistency (exit 0: yes, 10: no)");
  check->add_option("net", net_path, "P-TEG JSON file")->required();
  check->add_option("--output", output, "Output file");

  auto* death = app.add_subcommand("first-death", "Smallest infeasible horizon (exit 11 if weakly consistent)");
  death->add_option("net", net_path, "P-TEG JSON file")->required();
  death->add_option("--bound", bound, "Search [0, bound] instead of the certified horizon bound")
      ->check(CLI::NonNegativeNumber);
  death->add_option("--output", output, "Output file");

  auto* synth = app.add_subcommand("synthesize", "Consistent trajectory for horizon K (exit 12 if infeasible)");
  synth->add_option("net", net_path, "P-TEG JSON file")->required();
  synth->add_option("-K", horizon, "Horizon")->required();
  synth->add_option("--seed-vector", seed_path, "JSON array with n(K+1) entries");
  synth->add_option("--output", output, "Output file");

  auto* validate = app.add_subcommand("validate", "Check a trajectory (exit 13 on a violation)");
  validate->add_option("net", net_path, "P-TEG JSON file")->required();
  validate->add_option("trajectory", traj_path, "Trajectory JSON file")->required();
  validate->add_option("--output", output, "Output file");

  auto* matrices = app.add_subcommand("matrices", "Dump A0, A1, B0, B1, P, I, C");
  matrices->add_option("net", net_path, "P-TEG JSON file")->required();
  matrices->add_option("--output", output, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    Net net(net_path);
    char* json = nullptr;
    if (*check) {
      int wc = 0;
      if (ptegkit_status s = ptegkit_check_wc(net.get(), &wc, &json); s != PTEGKIT_OK) return fail(s);
      emit(take(json), output);
      return wc ? kOk : kNotWeaklyConsistent;
    }
    if (*death) {
      if (ptegkit_status s = ptegkit_first_death(net.get(), bound.value_or(-1), &json); s != PTEGKIT_OK) return fail(s);
      emit(take(json), output);
      return kOk;
    }
    if (*synth) {
      std::string seed;
      if (!seed_path.empty()) seed = read_file(seed_path);
      ptegkit_status s = ptegkit_synthesize(net.get(), horizon, seed_path.empty() ? nullptr : seed.c_str(), &json);
      if (s != PTEGKIT_OK) return fail(s);
      emit(take(json), output);
      return kOk;
    }
    if (*validate) {
      const std::string traj = read_file(traj_path);
      int consistent = 0;
      if (ptegkit_status s = ptegkit_validate(net.get(), traj.c_str(), &consistent, &json); s != PTEGKIT_OK)
        return fail(s);
      emit(take(json), output);
      return consistent ? kOk : kViolation;
    }
    if (*matrices) {
      if (ptegkit_status s = ptegkit_matrices(net.get(), &json); s != PTEGKIT_OK) return fail(s);
      emit(take(json), output);
      return kOk;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}
