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

#include "ptegkit/ptegkit.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "json_exact.hpp"
#include "ptegkit/death.hpp"
#include "ptegkit/parallel.hpp"
#include "ptegkit/periodic.hpp"
#include "ptegkit/pteg.hpp"
#include "ptegkit/trajectory.hpp"
#include "ptegkit/wc.hpp"
#include "report_json.hpp"

struct ptegkit_net {
  ptegkit::PTEG net;
  ptegkit::CharacteristicMatrices mats;
};

namespace {

thread_local std::string g_last_error;

ptegkit_status status_of(ptegkit::ErrorCode code) {
  using ptegkit::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return PTEGKIT_ERR_INVALID_ARGUMENT;
    case ErrorCode::DimensionMismatch: return PTEGKIT_ERR_DIMENSION_MISMATCH;
    case ErrorCode::FlavorMismatch: return PTEGKIT_ERR_FLAVOR_MISMATCH;
    case ErrorCode::NotInGamma: return PTEGKIT_ERR_NOT_IN_GAMMA;
    case ErrorCode::SchemaError: return PTEGKIT_ERR_SCHEMA;
    case ErrorCode::MarkingNotBinary: return PTEGKIT_ERR_MARKING_NOT_BINARY;
    case ErrorCode::EmptyNet: return PTEGKIT_ERR_EMPTY_NET;
    case ErrorCode::IntervalInverted: return PTEGKIT_ERR_INTERVAL_INVERTED;
    case ErrorCode::IsWeaklyConsistent: return PTEGKIT_ERR_IS_WEAKLY_CONSISTENT;
    case ErrorCode::HorizonInfeasible: return PTEGKIT_ERR_HORIZON_INFEASIBLE;
    case ErrorCode::Overflow: return PTEGKIT_ERR_OVERFLOW;
  }
  return PTEGKIT_ERR_INTERNAL;
}

template <class F>
ptegkit_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return PTEGKIT_OK;
  } catch (const ptegkit::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
  } catch (const std::exception& e) {
    g_last_error = e.what();
  } catch (...) {
    g_last_error = "unknown failure";
  }
  return PTEGKIT_ERR_INTERNAL;
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw ptegkit::Error(ptegkit::ErrorCode::InvalidArgument, std::string(what) + " is NULL");
}

std::vector<ptegkit::Rational> seed_from_json(const char* text) {
  using ptegkit::detail::rational_vector_from_json;
  const nlohmann::json doc = ptegkit::detail::parse_json_exact(text);
  if (!doc.is_array()) throw ptegkit::Error(ptegkit::ErrorCode::SchemaError, "seed vector must be a JSON array");
  if (!doc.empty() && doc.front().is_array()) {
    std::vector<ptegkit::Rational> flat;
    for (std::size_t k = 0; k < doc.size(); ++k) {
      auto part = rational_vector_from_json(doc[k], "seed[" + std::to_string(k) + "]");
      flat.insert(flat.end(), part.begin(), part.end());
    }
    return flat;
  }
  return rational_vector_from_json(doc, "seed");
}

}  // namespace

extern "C" {

ptegkit_status ptegkit_net_from_json(const char* json, size_t len, ptegkit_net** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    auto net = ptegkit::parse_pteg(std::string_view(json, len));
    auto mats = ptegkit::compile_matrices(net);
    *out = new ptegkit_net{std::move(net), std::move(mats)};
  });
}

void ptegkit_net_free(ptegkit_net* net) { delete net; }

size_t ptegkit_net_transition_count(const ptegkit_net* net) { return net == nullptr ? 0 : net->net.n(); }

ptegkit_status ptegkit_check_wc(const ptegkit_net* net, int* weakly_consistent, char** report_json) {
  return guarded([&] {
    require(net, "net");
    const auto v = ptegkit::verify_wc(net->mats);
    if (report_json != nullptr) *report_json = copy_out(ptegkit::detail::dump(ptegkit::detail::wc_report(v, net->net)));
    if (weakly_consistent != nullptr) *weakly_consistent = v.weakly_consistent ? 1 : 0;
  });
}

ptegkit_status ptegkit_first_death(const ptegkit_net* net, int64_t bound, char** report_json) {
  return guarded([&] {
    require(net, "net");
    require(report_json, "report_json");
    const auto r = bound < 0 ? ptegkit::first_death(net->mats)
                             : ptegkit::first_death(net->mats, static_cast<std::uint64_t>(bound));
    *report_json = copy_out(ptegkit::detail::dump(ptegkit::detail::death_report(r, net->net)));
  });
}

ptegkit_status ptegkit_synthesize(const ptegkit_net* net, uint64_t k, const char* seed_json, char** trajectory_json) {
  return guarded([&] {
    require(net, "net");
    require(trajectory_json, "trajectory_json");
    std::vector<ptegkit::Rational> seed;
    if (seed_json != nullptr) seed = seed_from_json(seed_json);
    if (seed_json != nullptr && seed.empty())
      throw ptegkit::Error(ptegkit::ErrorCode::DimensionMismatch, "seed vector is empty");
    const auto w = ptegkit::synthesize(net->mats, static_cast<std::size_t>(k), seed);
    *trajectory_json = copy_out(ptegkit::detail::dump(ptegkit::detail::trajectory_report(w)));
  });
}

ptegkit_status ptegkit_validate(const ptegkit_net* net, const char* trajectory_json, int* consistent,
                                char** report_json) {
  return guarded([&] {
    require(net, "net");
    require(trajectory_json, "trajectory_json");
    const auto traj = ptegkit::parse_trajectory(trajectory_json);
    const auto v = ptegkit::validate_trajectory(net->mats, traj);
    if (report_json != nullptr)
      *report_json = copy_out(ptegkit::detail::dump(ptegkit::detail::validation_report(v, net->net)));
    if (consistent != nullptr) *consistent = v ? 0 : 1;
  });
}

ptegkit_status ptegkit_matrices(const ptegkit_net* net, char** json) {
  return guarded([&] {
    require(net, "net");
    require(json, "json");
    const auto sys = ptegkit::build_periodic(net->mats);
    *json = copy_out(ptegkit::detail::dump(ptegkit::detail::matrices_report(net->mats, sys, net->net)));
  });
}

void ptegkit_string_free(char* s) { std::free(s); }

const char* ptegkit_last_error(void) { return g_last_error.c_str(); }

const char* ptegkit_status_name(ptegkit_status status) {
  switch (status) {
    case PTEGKIT_OK: return "OK";
    case PTEGKIT_ERR_INVALID_ARGUMENT: return "INVALID_ARGUMENT";
    case PTEGKIT_ERR_DIMENSION_MISMATCH: return "DIMENSION_MISMATCH";
    case PTEGKIT_ERR_FLAVOR_MISMATCH: return "FLAVOR_MISMATCH";
    case PTEGKIT_ERR_NOT_IN_GAMMA: return "NOT_IN_GAMMA";
    case PTEGKIT_ERR_SCHEMA: return "SCHEMA_ERROR";
    case PTEGKIT_ERR_MARKING_NOT_BINARY: return "MARKING_NOT_BINARY";
    case PTEGKIT_ERR_EMPTY_NET: return "EMPTY_NET";
    case PTEGKIT_ERR_INTERVAL_INVERTED: return "INTERVAL_INVERTED";
    case PTEGKIT_ERR_IS_WEAKLY_CONSISTENT: return "IS_WEAKLY_CONSISTENT";
    case PTEGKIT_ERR_HORIZON_INFEASIBLE: return "HORIZON_INFEASIBLE";
    case PTEGKIT_ERR_OVERFLOW: return "OVERFLOW";
    case PTEGKIT_ERR_INTERNAL: return "INTERNAL";
  }
  return "UNKNOWN";
}

void ptegkit_set_threads(unsigned threads) { ptegkit::set_thread_count(threads); }

}  // extern "C"
